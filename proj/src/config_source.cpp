#include "shiftlogic/config_source.hpp"

#include <stdexcept>

namespace shiftlogic {

namespace {
int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}
}  // namespace

ConfigSource::ConfigSource(AlphabetRef alphabet, int period_x, int period_y,
                           std::vector<uint16_t> background, Pattern patch)
    : alphabet_(std::move(alphabet)), px_(period_x), py_(period_y),
      background_(std::move(background)), patch_(std::move(patch)) {
    if (px_ <= 0 || py_ <= 0) throw std::runtime_error("ConfigSource: periods must be positive");
    if (background_.size() != size_t(px_) * size_t(py_))
        throw std::runtime_error("ConfigSource: background does not cover its rectangle");
    for (auto l : background_)
        if (l >= alphabet_->size()) throw std::runtime_error("ConfigSource: background letter out of range");
    if (!patch_.empty() && !same_alphabet(patch_.alphabet(), alphabet_))
        throw std::runtime_error("ConfigSource: patch alphabet mismatch");
}

ConfigSource ConfigSource::uniform(AlphabetRef alphabet, const std::string& letter) {
    uint16_t l = alphabet->index_of(letter);
    return ConfigSource(alphabet, 1, 1, {l}, Pattern(alphabet));
}

uint16_t ConfigSource::sample(Coord c) const {
    if (auto l = patch_.at(c)) return *l;
    return background_[size_t(floor_mod(c.y, py_)) * px_ + floor_mod(c.x, px_)];
}

ConfigSource ConfigSource::with_patch_cell(Coord c, const std::string& letter) const {
    Pattern p = patch_.empty() ? Pattern(alphabet_) : patch_;
    p.set(c, alphabet_->index_of(letter));
    return ConfigSource(alphabet_, px_, py_, background_, std::move(p));
}

ConfigSource ConfigSource::shifted(Coord v) const {
    // background'[x][y] = background[(x+v.x) mod p][(y+v.y) mod q]
    std::vector<uint16_t> bg(background_.size());
    for (int y = 0; y < py_; ++y)
        for (int x = 0; x < px_; ++x)
            bg[size_t(y) * px_ + x] =
                background_[size_t(floor_mod(y + v.y, py_)) * px_ + floor_mod(x + v.x, px_)];
    return ConfigSource(alphabet_, px_, py_, std::move(bg), patch_.translated(-v));
}

Pattern ConfigSource::window(const std::vector<Coord>& cells) const {
    std::vector<Pattern::Cell> cs;
    cs.reserve(cells.size());
    for (Coord c : cells) cs.push_back({c, sample(c)});
    return Pattern(alphabet_, std::move(cs));
}

ConfigSource apply_shift(const ConfigSource& x, Coord v) { return x.shifted(v); }
Pattern window_of(const ConfigSource& x, const std::vector<Coord>& cells) { return x.window(cells); }
Pattern window_of(const ConfigSource& x, const Rect& box) { return x.window(box); }

}  // namespace shiftlogic
