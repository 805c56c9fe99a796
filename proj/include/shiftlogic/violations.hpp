#pragma once

#include "shiftlogic/presentation.hpp"

namespace shiftlogic {

struct Violation {
    size_t index;  // into the forbidden sequence / rule set
    Coord at;
    friend bool operator==(const Violation& a, const Violation& b) {
        return a.index == b.index && a.at == b.at;
    }
};

// All (i, v) with F[i] occurring at v in P, ordered by index then by the
// canonical coordinate order.
std::vector<Violation> violations(const Pattern& p, const std::vector<Pattern>& forbidden);

// Rule-set variant over a (possibly product) alphabet. A layered rule fires
// at v when every constrained component matches inside the window; a pair
// table fires at v when both cells of the pair are in the window and the
// pair is not allowed. Table index i reports as rules.size() + i.
std::vector<Violation> violations(const Pattern& window, const RuleSet& rules);

bool layered_rule_matches(const LayeredRule& rule, const Pattern& window, Coord v);

}  // namespace shiftlogic
