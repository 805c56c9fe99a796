#pragma once

#include "shiftlogic/pattern.hpp"

namespace shiftlogic {

// Finitely presented configuration: a (p, q)-periodic background plus a
// finite patch of overrides. Sampling is total on the plane.
class ConfigSource {
public:
    // background letters row-major on [0,p) x [0,q): index = y * p + x.
    ConfigSource(AlphabetRef alphabet, int period_x, int period_y,
                 std::vector<uint16_t> background, Pattern patch);

    static ConfigSource uniform(AlphabetRef alphabet, const std::string& letter);

    const AlphabetRef& alphabet() const { return alphabet_; }
    int period_x() const { return px_; }
    int period_y() const { return py_; }
    const Pattern& patch() const { return patch_; }

    uint16_t sample(Coord c) const;
    const std::string& sample_token(Coord c) const { return alphabet_->token(sample(c)); }

    ConfigSource with_patch_cell(Coord c, const std::string& letter) const;

    // sigma^v: sampling the result at w equals sampling *this at w + v.
    ConfigSource shifted(Coord v) const;

    // Total window on E (any finite cell set).
    Pattern window(const std::vector<Coord>& cells) const;
    Pattern window(const Rect& box) const { return window(box.cells()); }

private:
    AlphabetRef alphabet_;
    int px_, py_;
    std::vector<uint16_t> background_;
    Pattern patch_;
};

ConfigSource apply_shift(const ConfigSource& x, Coord v);
Pattern window_of(const ConfigSource& x, const std::vector<Coord>& cells);
Pattern window_of(const ConfigSource& x, const Rect& box);

}  // namespace shiftlogic
