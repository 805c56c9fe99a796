#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shiftlogic/presentation.hpp"

namespace shiftlogic {

enum class Dir : uint8_t { N, S, E, W };

inline Coord dir_step(Dir d) {
    switch (d) {
        case Dir::N: return {0, 1};
        case Dir::S: return {0, -1};
        case Dir::E: return {1, 0};
        case Dir::W: return {-1, 0};
    }
    return {0, 0};
}

inline char dir_char(Dir d) {
    switch (d) {
        case Dir::N: return 'N';
        case Dir::S: return 'S';
        case Dir::E: return 'E';
        case Dir::W: return 'W';
    }
    return '?';
}

// Chain of adjacency functions applied to a first-order variable,
// outermost first: {N, E} over n denotes north(east(n)).
struct Term {
    std::string var;
    std::vector<Dir> dirs;

    size_t depth() const { return dirs.size(); }
    Coord offset() const {
        Coord o{0, 0};
        for (Dir d : dirs) o = o + dir_step(d);
        return o;
    }
    friend bool operator==(const Term& a, const Term& b) { return a.var == b.var && a.dirs == b.dirs; }
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Quant : uint8_t { ForAll, Exists };

// Extended MSO formula AST. SetAtom and presentation-free SecondOrder nodes
// are the pre-desugaring plain set-variable forms.
struct Formula {
    enum class Kind {
        SymAtom,      // letter@term          (ambient symbol predicate)
        EqAtom,       // term = term
        CfgAtom,      // X@term = letter      (configuration variable)
        SetAtom,      // U@term               (plain set variable)
        Not,
        And,
        Or,
        Implies,
        Iff,
        FirstOrder,   // A v. / E v.
        SecondOrder,  // A2 X[ref]. / E2 X. (plain when no presentation)
    };

    Kind kind;
    std::string letter;             // SymAtom, CfgAtom
    std::string var;                // CfgAtom/SetAtom (the 2nd-order var), quantifiers
    Term term, term2;               // atoms
    Quant quant = Quant::ForAll;
    PresentationRef domain;         // SecondOrder; null = plain set variable
    std::string domain_ref;         // source text of the [ref], for printing
    std::vector<FormulaPtr> kids;   // connectives, quantifier body in kids[0]

    static FormulaPtr sym(std::string letter, Term t);
    static FormulaPtr eq(Term a, Term b);
    static FormulaPtr cfg(std::string var, Term t, std::string letter);
    static FormulaPtr set_atom(std::string var, Term t);
    static FormulaPtr lnot(FormulaPtr a);
    static FormulaPtr land(std::vector<FormulaPtr> kids);
    static FormulaPtr lor(std::vector<FormulaPtr> kids);
    static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
    static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
    static FormulaPtr first_order(Quant q, std::string var, FormulaPtr body);
    static FormulaPtr second_order(Quant q, std::string var, PresentationRef domain,
                                   std::string domain_ref, FormulaPtr body);
    static FormulaPtr second_order_plain(Quant q, std::string var, FormulaPtr body);
};

bool structurally_equal(const Formula& a, const Formula& b);

// Precedence-aware printer; parse(print(f)) is structurally f.
std::string print_formula(const Formula& f);

// Maximal term depth.
size_t radius(const Formula& f);

// Rename bound and free variables consistently (test helper for
// classification invariance).
FormulaPtr rename_vars(const FormulaPtr& f,
                       const std::vector<std::pair<std::string, std::string>>& renaming);

}  // namespace shiftlogic
