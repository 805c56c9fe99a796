#include "shiftlogic/formula.hpp"

#include <cctype>
#include <sstream>

namespace shiftlogic {

namespace {
FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }
}

FormulaPtr Formula::sym(std::string letter, Term t) {
    Formula f;
    f.kind = Kind::SymAtom;
    f.letter = std::move(letter);
    f.term = std::move(t);
    return node(std::move(f));
}

FormulaPtr Formula::eq(Term a, Term b) {
    Formula f;
    f.kind = Kind::EqAtom;
    f.term = std::move(a);
    f.term2 = std::move(b);
    return node(std::move(f));
}

FormulaPtr Formula::cfg(std::string var, Term t, std::string letter) {
    Formula f;
    f.kind = Kind::CfgAtom;
    f.var = std::move(var);
    f.term = std::move(t);
    f.letter = std::move(letter);
    return node(std::move(f));
}

FormulaPtr Formula::set_atom(std::string var, Term t) {
    Formula f;
    f.kind = Kind::SetAtom;
    f.var = std::move(var);
    f.term = std::move(t);
    return node(std::move(f));
}

FormulaPtr Formula::lnot(FormulaPtr a) {
    Formula f;
    f.kind = Kind::Not;
    f.kids = {std::move(a)};
    return node(std::move(f));
}

namespace {
std::vector<FormulaPtr> flatten(Formula::Kind kind, std::vector<FormulaPtr> kids) {
    std::vector<FormulaPtr> out;
    for (auto& k : kids) {
        if (k->kind == kind)
            out.insert(out.end(), k->kids.begin(), k->kids.end());
        else
            out.push_back(std::move(k));
    }
    return out;
}
}  // namespace

FormulaPtr Formula::land(std::vector<FormulaPtr> kids) {
    kids = flatten(Kind::And, std::move(kids));
    if (kids.size() == 1) return kids[0];
    Formula f;
    f.kind = Kind::And;
    f.kids = std::move(kids);
    return node(std::move(f));
}

FormulaPtr Formula::lor(std::vector<FormulaPtr> kids) {
    kids = flatten(Kind::Or, std::move(kids));
    if (kids.size() == 1) return kids[0];
    Formula f;
    f.kind = Kind::Or;
    f.kids = std::move(kids);
    return node(std::move(f));
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
    Formula f;
    f.kind = Kind::Implies;
    f.kids = {std::move(a), std::move(b)};
    return node(std::move(f));
}

FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
    Formula f;
    f.kind = Kind::Iff;
    f.kids = {std::move(a), std::move(b)};
    return node(std::move(f));
}

FormulaPtr Formula::first_order(Quant q, std::string var, FormulaPtr body) {
    Formula f;
    f.kind = Kind::FirstOrder;
    f.quant = q;
    f.var = std::move(var);
    f.kids = {std::move(body)};
    return node(std::move(f));
}

FormulaPtr Formula::second_order(Quant q, std::string var, PresentationRef domain,
                                 std::string domain_ref, FormulaPtr body) {
    Formula f;
    f.kind = Kind::SecondOrder;
    f.quant = q;
    f.var = std::move(var);
    f.domain = std::move(domain);
    f.domain_ref = std::move(domain_ref);
    f.kids = {std::move(body)};
    return node(std::move(f));
}

FormulaPtr Formula::second_order_plain(Quant q, std::string var, FormulaPtr body) {
    Formula f;
    f.kind = Kind::SecondOrder;
    f.quant = q;
    f.var = std::move(var);
    f.kids = {std::move(body)};
    return node(std::move(f));
}

bool structurally_equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind) return false;
    if (a.letter != b.letter || a.var != b.var) return false;
    if (!(a.term == b.term) || !(a.term2 == b.term2)) return false;
    if (a.quant != b.quant) return false;
    if ((a.domain == nullptr) != (b.domain == nullptr)) return false;
    if (a.domain && !(*a.domain == *b.domain)) return false;
    if (a.kids.size() != b.kids.size()) return false;
    for (size_t i = 0; i < a.kids.size(); ++i)
        if (!structurally_equal(*a.kids[i], *b.kids[i])) return false;
    return true;
}

namespace {

bool token_needs_quotes(const std::string& t) {
    if (t.empty()) return true;
    for (char c : t) {
        if (std::isalnum((unsigned char)c) || c == '_' || c == '.' || c == '#') continue;
        return true;
    }
    // bare direction/quantifier keywords would misparse
    return t == "N" || t == "S" || t == "E" || t == "W" || t == "A" || t == "A2" || t == "E2";
}

std::string letter_text(const std::string& t) {
    if (!token_needs_quotes(t)) return t;
    std::string out = "\"";
    for (char c : t) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string term_text(const Term& t) {
    std::string out;
    for (Dir d : t.dirs) {
        out += dir_char(d);
        out += ' ';
    }
    out += t.var;
    return out;
}

// precedence: atoms/quantifier binders highest, then ! & | -> <->
int precedence(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Or: return 3;
        case Formula::Kind::And: return 4;
        case Formula::Kind::Not: return 5;
        case Formula::Kind::FirstOrder:
        case Formula::Kind::SecondOrder: return 0;  // body extends maximally
        default: return 6;
    }
}

void print(const Formula& f, std::ostream& out, int parent_prec) {
    int prec = precedence(f);
    bool parens = prec != 6 && prec < parent_prec;
    // quantifiers always parenthesized unless outermost context allows
    if (parens) out << '(';
    switch (f.kind) {
        case Formula::Kind::SymAtom:
            out << letter_text(f.letter) << '@' << term_text(f.term);
            break;
        case Formula::Kind::EqAtom:
            out << term_text(f.term) << " = " << term_text(f.term2);
            break;
        case Formula::Kind::CfgAtom:
            out << f.var << '@' << term_text(f.term) << " = " << letter_text(f.letter);
            break;
        case Formula::Kind::SetAtom:
            out << f.var << '@' << term_text(f.term);
            break;
        case Formula::Kind::Not:
            out << '!';
            print(*f.kids[0], out, 5);
            break;
        case Formula::Kind::And:
            for (size_t i = 0; i < f.kids.size(); ++i) {
                if (i) out << " & ";
                print(*f.kids[i], out, 5);
            }
            break;
        case Formula::Kind::Or:
            for (size_t i = 0; i < f.kids.size(); ++i) {
                if (i) out << " | ";
                print(*f.kids[i], out, 4);
            }
            break;
        case Formula::Kind::Implies:
            print(*f.kids[0], out, 3);
            out << " -> ";
            print(*f.kids[1], out, 2);  // right-associative
            break;
        case Formula::Kind::Iff:
            print(*f.kids[0], out, 2);
            out << " <-> ";
            print(*f.kids[1], out, 2);
            break;
        case Formula::Kind::FirstOrder:
            out << (f.quant == Quant::ForAll ? "A " : "E ") << f.var << ". ";
            print(*f.kids[0], out, 0);
            break;
        case Formula::Kind::SecondOrder:
            out << (f.quant == Quant::ForAll ? "A2 " : "E2 ") << f.var;
            if (f.domain) out << '[' << f.domain_ref << ']';
            out << ". ";
            print(*f.kids[0], out, 0);
            break;
    }
    if (parens) out << ')';
}

}  // namespace

std::string print_formula(const Formula& f) {
    std::ostringstream out;
    print(f, out, 0);
    return out.str();
}

size_t radius(const Formula& f) {
    size_t r = 0;
    switch (f.kind) {
        case Formula::Kind::SymAtom:
        case Formula::Kind::SetAtom:
        case Formula::Kind::CfgAtom:
            return f.term.depth();
        case Formula::Kind::EqAtom:
            return std::max(f.term.depth(), f.term2.depth());
        default:
            for (auto& k : f.kids) r = std::max(r, radius(*k));
            return r;
    }
}

FormulaPtr rename_vars(const FormulaPtr& f,
                       const std::vector<std::pair<std::string, std::string>>& renaming) {
    auto ren = [&](const std::string& v) {
        for (auto& [from, to] : renaming)
            if (v == from) return to;
        return v;
    };
    Formula g = *f;
    g.var = ren(g.var);
    g.term.var = ren(g.term.var);
    g.term2.var = ren(g.term2.var);
    for (auto& k : g.kids) k = rename_vars(k, renaming);
    return std::make_shared<const Formula>(std::move(g));
}

}  // namespace shiftlogic
