// Floor-diagram rendering: floors are drawn left to right along the view
// axis z.  Pieces confined to one floor (horizontal slabs, x/y dominoes) are
// drawn light; pieces spanning two floors are drawn dark on the lower floor
// and white on the upper floor, with identical footprints.
//
// ASCII legend (one glyph per cell, walls between distinct pieces):
//   '.'  interior of a single-floor piece        (light grey)
//   '#'  lower half of a two-floor piece         (dark grey)
//   ' '  upper half of a two-floor piece         (white)
//   '+', '-', '|'  piece boundaries and the region boundary
// Cells outside the region are blank and carry no walls.  The rendering is
// unambiguous: footprints are recovered from the walls, halves pair up
// across consecutive floors by footprint.
//
// SVG uses the same conventions with grey fills (#c8c8c8 / #6e6e6e / white).

#pragma once

#include <string>

#include "slablab/tiling.hpp"

namespace slablab {

std::string render_ascii(const Tiling& t, bool floor_labels = true);
std::string render_svg(const Tiling& t);

}  // namespace slablab
