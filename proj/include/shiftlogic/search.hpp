#pragma once

#include <optional>
#include <stdexcept>

#include "shiftlogic/presentation.hpp"

namespace shiftlogic {

// Raised when a search exceeds its node budget or the alphabet is too large
// for the pair tables. Maps to CLI exit code 3.
struct SearchCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    long long node_budget = 1LL << 24;
};

// Canonically-first total pattern on E + [-m,m]^2 agreeing with the pins and
// admissible for X, restricted back to E; nullopt if none exists.
// Pins must lie inside E.
std::optional<Pattern> extend(const Pattern& pins, const PresentationRef& x, const Rect& e,
                              int margin, const SearchOptions& opts = {});

// All margin-m admissible total patterns on E, canonical order (cells visited
// top-row-first, letters in alphabet order).
std::vector<Pattern> enumerate_admissible(const PresentationRef& x, const Rect& e, int margin,
                                          const SearchOptions& opts = {});

long long count_admissible(const PresentationRef& x, const Rect& e, int margin,
                           const SearchOptions& opts = {});

// Exact membership test for threshold presentations: does the total window
// extend to a configuration satisfying the threshold expression?
bool threshold_window_ok(const ThresholdExpr& expr, const Pattern& window);

// Internal solver surface shared with the semantics module: a compiled
// constraint model over one rectangle with incremental checking.
class GridModel {
public:
    GridModel(const PresentationRef& x, const Rect& grid);

    const Rect& grid() const { return grid_; }
    size_t letter_count() const { return n_; }
    bool trivial() const { return trivial_; }

    // -1 = unassigned
    int letter_at(size_t cell_index) const { return cells_[cell_index]; }
    size_t index_of(Coord c) const;
    Coord coord_of(size_t idx) const { return order_[idx]; }
    bool in_grid(Coord c) const { return grid_.contains(c); }

    // Letters consistent with already-assigned neighbors and all constraints
    // whose support becomes fully assigned at this cell, ascending order.
    void candidates(size_t cell_index, std::vector<uint16_t>& out) const;
    void assign(size_t cell_index, uint16_t letter);
    void unassign(size_t cell_index);

private:
    bool stencils_ok(size_t cell_index, uint16_t letter) const;

    Rect grid_;
    size_t n_ = 0;
    size_t words_ = 0;
    bool trivial_ = false;   // full shift: no constraints at all
    std::vector<Coord> order_;          // canonical order
    std::vector<int> cells_;            // by row-major storage index
    std::vector<size_t> storage_;       // order index -> storage index
    std::vector<uint64_t> east_ok_;     // [a] bitset of b allowed east of a
    std::vector<uint64_t> west_ok_;
    std::vector<uint64_t> north_ok_;    // [a] bitset of b allowed north of a
    std::vector<uint64_t> south_ok_;
    std::vector<uint8_t> unary_ok_;

    struct Stencil {
        std::vector<Coord> at;                 // relative cells
        std::vector<std::vector<uint8_t>> ok;  // per cell: letter passes requirement
        Coord last;                            // canonically last relative cell
    };
    std::vector<Stencil> stencils_;
    std::vector<std::vector<size_t>> stencil_by_last_;  // unused slot kept simple

    size_t storage_index(Coord c) const {
        return size_t(grid_.y1 - c.y) * grid_.width() + size_t(c.x - grid_.x0);
    }
};

}  // namespace shiftlogic
