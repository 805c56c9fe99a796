#include "shiftlogic/violations.hpp"

#include <stdexcept>

namespace shiftlogic {

std::vector<Violation> violations(const Pattern& p, const std::vector<Pattern>& forbidden) {
    std::vector<Violation> out;
    if (p.empty()) {
        // empty-domain forbidden patterns occur vacuously; Sft construction
        // rejects them, but accept a raw list defensively
        for (size_t i = 0; i < forbidden.size(); ++i)
            if (forbidden[i].empty()) out.push_back({i, {0, 0}});
        return out;
    }
    const Rect box = p.bounding_box();
    for (size_t i = 0; i < forbidden.size(); ++i) {
        const Pattern& f = forbidden[i];
        if (!same_alphabet(f.alphabet(), p.alphabet()))
            throw std::runtime_error("violations: alphabet mismatch");
        if (f.empty()) continue;
        const Rect fb = f.bounding_box();
        // anchors v with v + D(F) inside the bounding box, canonical order
        for (int y = box.y1 - fb.y0; y >= box.y0 - fb.y1; --y) {
            for (int x = box.x0 - fb.x0; x <= box.x1 - fb.x1; ++x) {
                Coord v{x, y};
                if (occurs_at(f, p, v)) out.push_back({i, v});
            }
        }
    }
    return out;
}

bool layered_rule_matches(const LayeredRule& rule, const Pattern& window, Coord v) {
    const Alphabet& a = *window.alphabet();
    for (auto& cell : rule.cells) {
        auto l = window.at(v + cell.at);
        if (!l) return false;
        for (auto& [layer, letter] : cell.req)
            if (a.component(*l, layer) != letter) return false;
    }
    return true;
}

std::vector<Violation> violations(const Pattern& window, const RuleSet& rules) {
    std::vector<Violation> out;
    if (window.empty()) return out;
    if (!same_alphabet(window.alphabet(), rules.alphabet))
        throw std::runtime_error("violations: alphabet mismatch with rule set");
    const Rect box = window.bounding_box();
    const Alphabet& a = *window.alphabet();
    for (size_t i = 0; i < rules.rules.size(); ++i) {
        const Rect rb = rules.rules[i].support();
        for (int y = box.y1 - rb.y0; y >= box.y0 - rb.y1; --y)
            for (int x = box.x0 - rb.x0; x <= box.x1 - rb.x1; ++x)
                if (layered_rule_matches(rules.rules[i], window, {x, y}))
                    out.push_back({i, {x, y}});
    }
    for (size_t t = 0; t < rules.tables.size(); ++t) {
        const PairTable& tab = rules.tables[t];
        Coord step = tab.horizontal ? Coord{1, 0} : Coord{0, 1};
        for (int y = box.y1; y >= box.y0; --y) {
            for (int x = box.x0; x <= box.x1; ++x) {
                Coord v{x, y};
                auto l1 = window.at(v);
                auto l2 = window.at(v + step);
                if (!l1 || !l2) continue;
                if (!tab.ok(a.component(*l1, tab.layer), a.component(*l2, tab.layer)))
                    out.push_back({rules.rules.size() + t, v});
            }
        }
    }
    return out;
}

}  // namespace shiftlogic
