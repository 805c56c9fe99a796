#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace shiftlogic {

// Integer plane coordinate. y increases northward.
struct Coord {
    int x = 0;
    int y = 0;

    friend Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
    friend Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }
    Coord operator-() const { return {-x, -y}; }
    friend bool operator==(Coord a, Coord b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Coord a, Coord b) { return !(a == b); }
};

inline Coord north(Coord c) { return {c.x, c.y + 1}; }
inline Coord south(Coord c) { return {c.x, c.y - 1}; }
inline Coord east(Coord c) { return {c.x + 1, c.y}; }
inline Coord west(Coord c) { return {c.x - 1, c.y}; }

// Canonical coordinate order: y descending, then x ascending.
// Matches row-by-row rendering with the top row first.
inline bool canonical_less(Coord a, Coord b) {
    if (a.y != b.y) return a.y > b.y;
    return a.x < b.x;
}

struct CoordHash {
    size_t operator()(Coord c) const {
        uint64_t k = (uint64_t(uint32_t(c.x)) << 32) | uint32_t(c.y);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return size_t(k);
    }
};

// Inclusive rectangle of cells.
struct Rect {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1;  // empty by default

    static Rect of_cell(Coord c) { return {c.x, c.y, c.x, c.y}; }
    bool empty() const { return x1 < x0 || y1 < y0; }
    int width() const { return empty() ? 0 : x1 - x0 + 1; }
    int height() const { return empty() ? 0 : y1 - y0 + 1; }
    long long area() const { return (long long)width() * height(); }
    bool contains(Coord c) const { return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1; }
    bool contains(const Rect& r) const {
        return r.empty() || (r.x0 >= x0 && r.x1 <= x1 && r.y0 >= y0 && r.y1 <= y1);
    }
    void include(Coord c) {
        if (empty()) { x0 = x1 = c.x; y0 = y1 = c.y; return; }
        if (c.x < x0) x0 = c.x;
        if (c.x > x1) x1 = c.x;
        if (c.y < y0) y0 = c.y;
        if (c.y > y1) y1 = c.y;
    }
    Rect inflate(int m) const {
        if (empty()) return *this;
        return {x0 - m, y0 - m, x1 + m, y1 + m};
    }
    friend bool operator==(const Rect& a, const Rect& b) {
        return a.x0 == b.x0 && a.y0 == b.y0 && a.x1 == b.x1 && a.y1 == b.y1;
    }

    // Cells in canonical order.
    std::vector<Coord> cells() const {
        std::vector<Coord> out;
        out.reserve(size_t(std::max(0LL, area())));
        for (int y = y1; y >= y0; --y)
            for (int x = x0; x <= x1; ++x) out.push_back({x, y});
        return out;
    }
};

}  // namespace shiftlogic
