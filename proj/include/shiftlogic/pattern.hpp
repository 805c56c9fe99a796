#pragma once

#include <algorithm>
#include <iosfwd>
#include <optional>

#include "shiftlogic/alphabet.hpp"
#include "shiftlogic/geometry.hpp"

namespace shiftlogic {

// Finite partial coloring of the plane. Cells are kept in canonical order
// (y descending, x ascending). The empty domain is legal.
class Pattern {
public:
    struct Cell {
        Coord at;
        uint16_t letter;
    };

    Pattern() = default;
    explicit Pattern(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
    Pattern(AlphabetRef alphabet, std::vector<Cell> cells);

    static Pattern from_tokens(AlphabetRef alphabet,
                               const std::vector<std::pair<Coord, std::string>>& cells);

    const AlphabetRef& alphabet() const { return alphabet_; }
    const std::vector<Cell>& cells() const { return cells_; }
    size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const Rect& bounding_box() const { return bbox_; }

    std::optional<uint16_t> at(Coord c) const;
    bool has(Coord c) const { return at(c).has_value(); }
    const std::string& token_at(Coord c) const;

    void set(Coord c, uint16_t letter);

    Pattern translated(Coord v) const;
    Pattern restricted(const std::vector<Coord>& domain) const;

    // Total ordering used for canonical sequences of patterns on a shared
    // domain: cellwise letter comparison in canonical coordinate order.
    friend bool operator==(const Pattern& a, const Pattern& b);
    static bool canonical_before(const Pattern& a, const Pattern& b);

private:
    AlphabetRef alphabet_;
    std::vector<Cell> cells_;  // sorted canonically
    Rect bbox_;
};

// occurs_at(P, Q, v): P occurs at v in Q. Alphabets must agree.
bool occurs_at(const Pattern& p, const Pattern& q, Coord v);

}  // namespace shiftlogic
