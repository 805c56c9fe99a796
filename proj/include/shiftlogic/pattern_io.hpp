#pragma once

#include <iosfwd>
#include <string>

#include "shiftlogic/pattern.hpp"

namespace shiftlogic {

// Pattern text format:
//   alphabet <tok> <tok> ...
//   origin <x> <y>          (coordinate of the top-left grid cell)
//   <grid rows>             ('.' marks a hole; single-char alphabets may use
//                            compact rows, otherwise cells are whitespace-split)
std::string pattern_to_text(const Pattern& p);
Pattern pattern_from_text(const std::string& text);
Pattern load_pattern(const std::string& path);
void save_pattern(const Pattern& p, const std::string& path);

// Grid block without header lines, as used inside SFT files. The anchor is
// the top-left cell of the block.
std::string grid_to_text(const Pattern& p, Coord top_left);

}  // namespace shiftlogic
