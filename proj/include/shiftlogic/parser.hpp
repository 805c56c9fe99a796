#pragma once

#include <map>

#include "shiftlogic/formula.hpp"

namespace shiftlogic {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line), column(column) {}
};

// Named presentations usable as [ref] in second-order quantifiers, plus the
// base directory for sft("file") references.
struct PresentationRegistry {
    std::map<std::string, PresentationRef> named;
    std::string base_dir;  // "" = current directory

    PresentationRef resolve_file(const std::string& path) const;
};

// Grammar (tokens are ASCII; '#' at the start of a line begins a comment):
//   formula := iff
//   iff     := impl ('<->' impl)*
//   impl    := or ('->' impl)?
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | quantifier | atom | '(' formula ')'
//   quant   := ('A'|'E') var '.' formula
//            | ('A2'|'E2') Var ('[' ref ']')? '.' formula
//   ref     := 'full' '(' tok (',' tok)* ')' | 'sft' '(' string ')' | name
//   atom    := letter '@' term | Var '@' term ('=' letter)? | term '=' term
//   term    := ('N'|'S'|'E'|'W')* var
// Shadowing a variable in scope is a parse error; atoms must use variables
// in scope, and configuration-variable letters must belong to the quantified
// presentation's alphabet.
FormulaPtr parse_formula(const std::string& text, const PresentationRegistry& registry = {});

// Formula file: optional leading "alphabet <tok>..." directive naming the
// ambient alphabet, then one formula (possibly spanning several lines).
struct FormulaFile {
    FormulaPtr formula;
    AlphabetRef ambient;  // null when the directive is absent
};
FormulaFile parse_formula_file_text(const std::string& text,
                                    const PresentationRegistry& registry = {});
FormulaFile load_formula(const std::string& path, const PresentationRegistry& registry = {});

// Manifest: lines of the form "name = <ref>" with the same ref syntax.
PresentationRegistry load_registry(const std::string& path);

// Letters appearing in ambient symbol atoms, sorted lexicographically; the
// default ambient alphabet when no directive or flag names one.
std::vector<std::string> symbol_letters(const Formula& f);

}  // namespace shiftlogic
