#include "shiftlogic/presentation.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "shiftlogic/pattern_io.hpp"

namespace shiftlogic {

namespace {

void serialize_pattern(std::ostream& out, const Pattern& p) {
    out << '{';
    for (auto& c : p.cells()) out << c.at.x << ',' << c.at.y << ':' << c.letter << ';';
    out << '}';
}

void serialize_threshold(std::ostream& out, const ThresholdExpr& e) {
    switch (e.kind) {
        case ThresholdExpr::Kind::Leaf:
            out << "L" << e.bound;
            serialize_pattern(out, e.pattern);
            break;
        case ThresholdExpr::Kind::Union:
            out << "U(";
            for (auto& p : e.parts) serialize_threshold(out, p);
            out << ')';
            break;
        case ThresholdExpr::Kind::Intersection:
            out << "I(";
            for (auto& p : e.parts) serialize_threshold(out, p);
            out << ')';
            break;
    }
}

std::string alphabet_serial(const AlphabetRef& a) {
    std::string s = "[";
    for (auto& t : a->tokens()) {
        s += t;
        s += ' ';
    }
    s += ']';
    return s;
}

}  // namespace

PresentationRef SubshiftPresentation::full_shift(AlphabetRef a) {
    auto p = std::shared_ptr<SubshiftPresentation>(new SubshiftPresentation());
    p->kind_ = Kind::Full;
    p->alphabet_ = std::move(a);
    p->serial_ = "full" + alphabet_serial(p->alphabet_);
    return p;
}

PresentationRef SubshiftPresentation::sft(AlphabetRef a, std::vector<Pattern> forbidden) {
    for (auto& f : forbidden) {
        if (f.empty())
            throw std::runtime_error("sft: empty-domain forbidden pattern would forbid everything");
        if (!same_alphabet(f.alphabet(), a))
            throw std::runtime_error("sft: forbidden pattern alphabet mismatch");
    }
    auto p = std::shared_ptr<SubshiftPresentation>(new SubshiftPresentation());
    p->kind_ = Kind::Sft;
    p->alphabet_ = std::move(a);
    p->forbidden_ = std::move(forbidden);
    std::ostringstream s;
    s << "sft" << alphabet_serial(p->alphabet_);
    for (auto& f : p->forbidden_) serialize_pattern(s, f);
    p->serial_ = s.str();
    return p;
}

PresentationRef SubshiftPresentation::rule_sft(RuleSet rules) {
    auto p = std::shared_ptr<SubshiftPresentation>(new SubshiftPresentation());
    p->kind_ = Kind::RuleSft;
    p->alphabet_ = rules.alphabet;
    p->rules_ = std::move(rules);
    std::ostringstream s;
    s << "rulesft" << alphabet_serial(p->alphabet_) << p->rules_.rules.size() << '/'
      << p->rules_.tables.size();
    for (auto& r : p->rules_.rules) {
        s << '{';
        for (auto& c : r.cells) {
            s << c.at.x << ',' << c.at.y << ':';
            for (auto& [layer, letter] : c.req) s << int(layer) << '=' << letter << ';';
        }
        s << '}';
    }
    for (auto& t : p->rules_.tables) {
        s << 'T' << int(t.layer) << (t.horizontal ? 'h' : 'v');
        size_t h = 1469598103934665603ULL;
        for (uint8_t b : t.allowed) h = (h ^ b) * 1099511628211ULL;
        s << h;
    }
    p->serial_ = s.str();
    return p;
}

PresentationRef SubshiftPresentation::threshold(AlphabetRef a, ThresholdExpr expr) {
    std::function<void(const ThresholdExpr&)> check = [&](const ThresholdExpr& e) {
        if (e.kind == ThresholdExpr::Kind::Leaf) {
            if (e.pattern.empty()) throw std::runtime_error("threshold: empty-domain pattern");
            if (!same_alphabet(e.pattern.alphabet(), a))
                throw std::runtime_error("threshold: pattern alphabet mismatch");
            if (e.bound < 0) throw std::runtime_error("threshold: negative bound");
        }
        for (auto& k : e.parts) check(k);
    };
    check(expr);
    auto p = std::shared_ptr<SubshiftPresentation>(new SubshiftPresentation());
    p->kind_ = Kind::Threshold;
    p->alphabet_ = std::move(a);
    p->threshold_ = std::move(expr);
    std::ostringstream s;
    s << "thr" << alphabet_serial(p->alphabet_);
    serialize_threshold(s, p->threshold_);
    p->serial_ = s.str();
    return p;
}

PresentationRef SubshiftPresentation::product(std::vector<PresentationRef> components) {
    if (components.empty()) throw std::runtime_error("product: needs at least one component");
    std::vector<AlphabetRef> as;
    for (auto& c : components) as.push_back(c->alphabet());
    auto p = std::shared_ptr<SubshiftPresentation>(new SubshiftPresentation());
    p->kind_ = Kind::Product;
    p->alphabet_ = Alphabet::product(as);
    p->components_ = std::move(components);
    std::string s = "prod(";
    for (auto& c : p->components_) s += c->serial() + ",";
    s += ')';
    p->serial_ = std::move(s);
    return p;
}

PresentationRef SubshiftPresentation::sofic(PresentationRef base, std::vector<uint16_t> letter_map,
                                            AlphabetRef target) {
    if (letter_map.size() != base->alphabet()->size())
        throw std::runtime_error("sofic: letter map must be total on the SFT alphabet");
    for (auto l : letter_map)
        if (l >= target->size()) throw std::runtime_error("sofic: letter map target out of range");
    auto p = std::shared_ptr<SubshiftPresentation>(new SubshiftPresentation());
    p->kind_ = Kind::Sofic;
    p->alphabet_ = std::move(target);
    p->sofic_base_ = std::move(base);
    p->letter_map_ = std::move(letter_map);
    std::ostringstream s;
    s << "sofic(" << p->sofic_base_->serial() << ")->" << alphabet_serial(p->alphabet_) << '[';
    for (auto l : p->letter_map_) s << l << ' ';
    s << ']';
    p->serial_ = s.str();
    return p;
}

std::string sft_to_text(const SubshiftPresentation& p) {
    if (p.kind() != SubshiftPresentation::Kind::Sft)
        throw std::runtime_error("sft_to_text: presentation is not a plain SFT");
    std::ostringstream out;
    out << "alphabet";
    for (auto& t : p.alphabet()->tokens()) out << ' ' << t;
    out << '\n';
    for (auto& f : p.forbidden()) {
        out << "forbidden:\n";
        Rect b = f.bounding_box();
        out << grid_to_text(f, {b.x0, b.y1});
    }
    return out.str();
}

PresentationRef sft_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    AlphabetRef alphabet;
    std::vector<Pattern> forbidden;
    std::vector<std::string> block;

    auto flush_block = [&]() {
        if (block.empty()) return;
        std::vector<std::pair<Coord, std::string>> cells;
        for (size_t row = 0; row < block.size(); ++row) {
            std::istringstream ls(block[row]);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (toks.size() == 1 && alphabet->all_single_char() && toks[0].size() > 1) {
                std::vector<std::string> expanded;
                for (char ch : toks[0]) expanded.push_back(std::string(1, ch));
                toks = expanded;
            }
            for (size_t i = 0; i < toks.size(); ++i) {
                if (toks[i] == ".") continue;
                cells.push_back({Coord{int(i), -int(row)}, toks[i]});
            }
        }
        block.clear();
        forbidden.push_back(Pattern::from_tokens(alphabet, cells));
    };

    bool in_block = false;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "alphabet") {
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            alphabet = Alphabet::make(toks);
            continue;
        }
        if (head == "forbidden:") {
            if (!alphabet) throw std::runtime_error("sft file: forbidden block before alphabet");
            flush_block();
            in_block = true;
            continue;
        }
        if (!in_block) throw std::runtime_error("sft file: unexpected line: " + line);
        block.push_back(line);
    }
    if (!alphabet) throw std::runtime_error("sft file: missing alphabet line");
    flush_block();
    return SubshiftPresentation::sft(alphabet, std::move(forbidden));
}

PresentationRef load_sft(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open sft file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return sft_from_text(buf.str());
}

void save_sft(const SubshiftPresentation& p, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write sft file: " + path);
    f << sft_to_text(p);
}

}  // namespace shiftlogic
