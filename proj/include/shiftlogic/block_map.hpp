#pragma once

#include <map>

#include "shiftlogic/pattern.hpp"

namespace shiftlogic {

// Sliding local rule: neighborhood D and local function B_D -> target letter.
// Rule keys are neighborhood patterns anchored at the origin, encoded as the
// letter sequence over the neighborhood in canonical order.
class BlockMap {
public:
    BlockMap(AlphabetRef source, AlphabetRef target, std::vector<Coord> neighborhood);

    void add_rule(const std::vector<std::string>& neighborhood_letters, const std::string& out);

    const std::vector<Coord>& neighborhood() const { return nbhd_; }
    const AlphabetRef& source_alphabet() const { return source_; }
    const AlphabetRef& target_alphabet() const { return target_; }

    // Output domain: { v : v + neighborhood subset of D(P) }.
    // Throws if the local rule is undefined on an encountered window.
    Pattern apply(const Pattern& p) const;

private:
    AlphabetRef source_, target_;
    std::vector<Coord> nbhd_;  // canonical order
    std::map<std::vector<uint16_t>, uint16_t> rule_;
};

inline Pattern apply_block_map(const BlockMap& f, const Pattern& p) { return f.apply(p); }

}  // namespace shiftlogic
