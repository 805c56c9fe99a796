#include "shiftlogic/parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace shiftlogic {

PresentationRef PresentationRegistry::resolve_file(const std::string& path) const {
    std::string full = path;
    if (!base_dir.empty() && !path.empty() && path[0] != '/') full = base_dir + "/" + path;
    return load_sft(full);
}

namespace {

struct Token {
    enum class Kind { Word, Quoted, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0, col = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) {
        // '#' begins a comment only at the start of a line
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            size_t first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] == '#') continue;
            lex_line(line, lineno);
        }
        toks_.push_back(Token{Token::Kind::End, "", lineno, 0});
    }

    const Token& peek(size_t ahead = 0) const {
        size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    Token next() {
        Token t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }

private:
    void lex_line(const std::string& line, int lineno) {
        size_t i = 0;
        // '|' is the OR connective; letters containing it must be quoted
        auto is_word = [](char c) {
            return std::isalnum((unsigned char)c) || c == '_' || c == '.' || c == '#';
        };
        while (i < line.size()) {
            char c = line[i];
            if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
            int col = int(i) + 1;
            if (c == '"') {
                std::string s;
                ++i;
                while (i < line.size() && line[i] != '"') {
                    if (line[i] == '\\' && i + 1 < line.size()) ++i;
                    s += line[i++];
                }
                if (i >= line.size()) throw ParseError("unterminated string", lineno, col);
                ++i;
                toks_.push_back({Token::Kind::Quoted, s, lineno, col});
                continue;
            }
            if (line.compare(i, 3, "<->") == 0) {
                toks_.push_back({Token::Kind::Punct, "<->", lineno, col});
                i += 3;
                continue;
            }
            if (line.compare(i, 2, "->") == 0) {
                toks_.push_back({Token::Kind::Punct, "->", lineno, col});
                i += 2;
                continue;
            }
            if (std::string("()[]@=!&|,.").find(c) != std::string::npos) {
                // '.' inside words is part of dotted tokens; standalone it is
                // quantifier punctuation
                if (c == '.' && i > 0 && is_word(line[i - 1]) && i + 1 < line.size() &&
                    is_word(line[i + 1])) {
                    // fallthrough to word lexing (dotted token)
                } else {
                    toks_.push_back({Token::Kind::Punct, std::string(1, c), lineno, col});
                    ++i;
                    continue;
                }
            }
            if (is_word(c)) {
                size_t j = i;
                while (j < line.size() && is_word(line[j])) ++j;
                // trailing '.' is quantifier punctuation, not part of the word
                while (j > i + 1 && line[j - 1] == '.') --j;
                toks_.push_back({Token::Kind::Word, line.substr(i, j - i), lineno, col});
                i = j;
                continue;
            }
            throw ParseError(std::string("unexpected character '") + c + "'", lineno, col);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

struct Scope {
    std::set<std::string> fo_vars;
    std::map<std::string, PresentationRef> cfg_vars;  // null value = plain set var
};

class Parser {
public:
    Parser(const std::string& text, const PresentationRegistry& reg) : lx_(text), reg_(reg) {}

    FormulaPtr parse() {
        FormulaPtr f = formula();
        const Token& t = lx_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.col);
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        const Token& t = lx_.peek();
        throw ParseError(msg, t.line, t.col);
    }

    bool punct(const std::string& p) {
        const Token& t = lx_.peek();
        if (t.kind == Token::Kind::Punct && t.text == p) {
            lx_.next();
            return true;
        }
        return false;
    }

    void expect(const std::string& p) {
        if (!punct(p)) fail("expected '" + p + "'");
    }

    static bool is_dir(const std::string& w) {
        return w == "N" || w == "S" || w == "E" || w == "W";
    }

    std::string expect_name(const char* what) {
        const Token& t = lx_.peek();
        if (t.kind != Token::Kind::Word) fail(std::string("expected ") + what);
        if (is_dir(t.text) || t.text == "A" || t.text == "E" || t.text == "A2" || t.text == "E2")
            fail(std::string("reserved word used as ") + what);
        return lx_.next().text;
    }

    FormulaPtr formula() {
        FormulaPtr f = impl();
        while (punct("<->")) f = Formula::iff(f, impl());
        return f;
    }

    FormulaPtr impl() {
        FormulaPtr f = disj();
        if (punct("->")) return Formula::implies(f, impl());
        return f;
    }

    FormulaPtr disj() {
        std::vector<FormulaPtr> kids{conj()};
        while (punct("|")) kids.push_back(conj());
        return Formula::lor(std::move(kids));
    }

    FormulaPtr conj() {
        std::vector<FormulaPtr> kids{unary()};
        while (punct("&")) kids.push_back(unary());
        return Formula::land(std::move(kids));
    }

    bool at_quantifier() {
        const Token& t = lx_.peek();
        if (t.kind != Token::Kind::Word) return false;
        if (t.text != "A" && t.text != "E" && t.text != "A2" && t.text != "E2") return false;
        const Token& v = lx_.peek(1);
        if (v.kind != Token::Kind::Word) return false;
        const Token& p = lx_.peek(2);
        if (t.text == "A" || t.text == "E")
            return p.kind == Token::Kind::Punct && p.text == ".";
        return p.kind == Token::Kind::Punct && (p.text == "." || p.text == "[");
    }

    FormulaPtr unary() {
        if (punct("!")) return Formula::lnot(unary());
        if (punct("(")) {
            FormulaPtr f = formula();
            expect(")");
            return f;
        }
        if (at_quantifier()) return quantifier();
        return atom();
    }

    FormulaPtr quantifier() {
        std::string q = lx_.next().text;
        Quant quant = (q == "A" || q == "A2") ? Quant::ForAll : Quant::Exists;
        std::string var = expect_name("variable name");
        if (q == "A" || q == "E") {
            if (scope_.fo_vars.count(var) || scope_.cfg_vars.count(var))
                fail("variable '" + var + "' shadows an enclosing binding");
            expect(".");
            scope_.fo_vars.insert(var);
            FormulaPtr body = formula();
            scope_.fo_vars.erase(var);
            return Formula::first_order(quant, var, body);
        }
        if (scope_.fo_vars.count(var) || scope_.cfg_vars.count(var))
            fail("variable '" + var + "' shadows an enclosing binding");
        PresentationRef domain;
        std::string ref_text;
        if (punct("[")) {
            std::tie(domain, ref_text) = presentation_ref();
            expect("]");
        }
        expect(".");
        scope_.cfg_vars.emplace(var, domain);
        FormulaPtr body = formula();
        scope_.cfg_vars.erase(var);
        if (domain) return Formula::second_order(quant, var, domain, ref_text, body);
        return Formula::second_order_plain(quant, var, body);
    }

    std::pair<PresentationRef, std::string> presentation_ref() {
        const Token& t = lx_.peek();
        if (t.kind != Token::Kind::Word) fail("expected presentation reference");
        if (t.text == "full") {
            lx_.next();
            expect("(");
            std::vector<std::string> toks;
            while (true) {
                const Token& w = lx_.peek();
                if (w.kind != Token::Kind::Word && w.kind != Token::Kind::Quoted)
                    fail("expected letter token");
                toks.push_back(lx_.next().text);
                if (!punct(",")) break;
            }
            expect(")");
            std::string ref = "full(";
            for (size_t i = 0; i < toks.size(); ++i) {
                if (i) ref += ",";
                ref += toks[i];
            }
            ref += ")";
            return {SubshiftPresentation::full_shift(Alphabet::make(toks)), ref};
        }
        if (t.text == "sft") {
            lx_.next();
            expect("(");
            const Token& w = lx_.peek();
            if (w.kind != Token::Kind::Quoted) fail("expected quoted file path");
            std::string path = lx_.next().text;
            expect(")");
            return {reg_.resolve_file(path), "sft(\"" + path + "\")"};
        }
        std::string name = lx_.next().text;
        auto it = reg_.named.find(name);
        if (it == reg_.named.end()) fail("unknown presentation name '" + name + "'");
        return {it->second, name};
    }

    Term term() {
        Term t;
        while (true) {
            const Token& w = lx_.peek();
            if (w.kind != Token::Kind::Word) fail("expected term");
            if (is_dir(w.text) ) {
                // direction unless it is the final variable... directions are
                // reserved, so a bare direction cannot be a variable
                char c = lx_.next().text[0];
                t.dirs.push_back(c == 'N' ? Dir::N : c == 'S' ? Dir::S : c == 'E' ? Dir::E : Dir::W);
                continue;
            }
            t.var = expect_name("first-order variable");
            break;
        }
        if (!scope_.fo_vars.count(t.var)) fail("unbound first-order variable '" + t.var + "'");
        return t;
    }

    FormulaPtr atom() {
        const Token& t = lx_.peek();
        if (t.kind == Token::Kind::Quoted || (t.kind == Token::Kind::Word && !is_dir(t.text))) {
            // letter@term, X@term[=letter], or a term starting with a variable
            const Token& after = lx_.peek(1);
            if (after.kind == Token::Kind::Punct && after.text == "@") {
                std::string head = lx_.next().text;
                lx_.next();  // '@'
                Term tm = term();
                auto cfg = scope_.cfg_vars.find(head);
                if (cfg != scope_.cfg_vars.end()) {
                    if (cfg->second) {  // configuration variable over a presentation
                        if (!punct("=")) fail("configuration-variable atom requires '= letter'");
                        const Token& lt = lx_.peek();
                        if (lt.kind != Token::Kind::Word && lt.kind != Token::Kind::Quoted)
                            fail("expected letter");
                        std::string letter = lx_.next().text;
                        if (!cfg->second->alphabet()->has(letter))
                            fail("letter '" + letter + "' is not in the alphabet of '" + head + "'");
                        return Formula::cfg(head, tm, letter);
                    }
                    if (punct("=")) fail("plain set variable '" + head + "' takes no '= letter'");
                    return Formula::set_atom(head, tm);
                }
                return Formula::sym(head, tm);
            }
        }
        // term = term
        Term a = term();
        expect("=");
        Term b = term();
        return Formula::eq(a, b);
    }

    Lexer lx_;
    const PresentationRegistry& reg_;
    Scope scope_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const PresentationRegistry& registry) {
    return Parser(text, registry).parse();
}

FormulaFile parse_formula_file_text(const std::string& text, const PresentationRegistry& registry) {
    // peel an optional "alphabet ..." first line (comments allowed above it)
    std::istringstream in(text);
    std::string line;
    std::ostringstream rest;
    AlphabetRef ambient;
    bool seen_content = false;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (!seen_content && first != std::string::npos && line[first] != '#') {
            std::istringstream ls(line);
            std::string head;
            ls >> head;
            if (head == "alphabet") {
                std::vector<std::string> toks;
                std::string t;
                while (ls >> t) toks.push_back(t);
                ambient = Alphabet::make(toks);
                seen_content = true;
                continue;
            }
            seen_content = true;
        }
        rest << line << '\n';
    }
    return {parse_formula(rest.str(), registry), ambient};
}

FormulaFile load_formula(const std::string& path, const PresentationRegistry& registry) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open formula file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    PresentationRegistry reg = registry;
    if (reg.base_dir.empty()) {
        auto slash = path.find_last_of('/');
        if (slash != std::string::npos) reg.base_dir = path.substr(0, slash);
    }
    return parse_formula_file_text(buf.str(), reg);
}

PresentationRegistry load_registry(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open registry file: " + path);
    PresentationRegistry reg;
    auto slash = path.find_last_of('/');
    if (slash != std::string::npos) reg.base_dir = path.substr(0, slash);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("registry line " + std::to_string(lineno) +
                                     ": expected 'name = ref'");
        std::istringstream ns(line.substr(0, eq));
        std::string name;
        ns >> name;
        std::string ref = line.substr(eq + 1);
        // reuse the formula parser on a synthetic quantifier to parse the ref
        std::string synthetic = "E2 X__[" + ref + "]. A n__. n__ = n__";
        auto fp = parse_formula(synthetic, reg);
        reg.named[name] = fp->domain;
    }
    return reg;
}

std::vector<std::string> symbol_letters(const Formula& f) {
    std::set<std::string> s;
    std::function<void(const Formula&)> walk = [&](const Formula& g) {
        if (g.kind == Formula::Kind::SymAtom) s.insert(g.letter);
        for (auto& k : g.kids) walk(*k);
    };
    walk(f);
    return {s.begin(), s.end()};
}

}  // namespace shiftlogic
