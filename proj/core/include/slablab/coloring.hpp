// The slab-type coloring and good pairs.
//
// phi(x,y,z) = (y+z mod 2, x+z mod 2) assigns each cell one of four colors:
//   (0,0) green, (0,1) yellow, (1,0) blue, (1,1) red.
// Every 2x2x1 slab placement covers all four colors exactly once.
//
// A good pair is keyed by a view axis and a parity.  A cell is good for
// (axis a, parity p) iff b+c = p (mod 2), where (b,c) are the cell's
// coordinates transverse to a in the cyclic order z->(x,y), x->(y,z),
// y->(z,x).  The parity-0 pair always contains green; concretely the color
// classes are red-green for the z axis, green-yellow for x, green-blue for y
// (and their complements blue-yellow, red-blue, red-yellow).

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slablab/region.hpp"

namespace slablab {

enum class Color : std::uint8_t { green = 0, yellow = 1, blue = 2, red = 3 };

const char* color_name(Color c);

Color color_of(const Cell& c);

struct GoodPair {
  Axis axis = Axis::Z;
  int parity = 0;  // 0 or 1

  friend constexpr auto operator<=>(const GoodPair&, const GoodPair&) = default;

  GoodPair complement() const { return {axis, 1 - parity}; }
  // The two colors forming this pair's good class.
  std::array<Color, 2> colors() const;
  std::string name() const;  // e.g. "z/0 (red-green)"
};

// Canonical pair for a view axis: the parity-0 (green-containing) pair.
inline constexpr GoodPair canonical_pair(Axis a) { return GoodPair{a, 0}; }

bool is_good(const Cell& c, const GoodPair& pair);

// Enumerates every assignment of the four colors to the region's cells such
// that each 2x2x1 slab placement inside the region covers four distinct
// colors.  Assignments are reported aligned with region.cells(); the visitor
// returns false to stop early.  Returns the number of colorings visited.
std::uint64_t enumerate_slab_type_colorings(
    const Region& region,
    const std::function<bool(const std::vector<Color>&)>& visit);

std::vector<std::vector<Color>> all_slab_type_colorings(const Region& region);

// True iff `coloring` (aligned with region.cells()) equals color_of composed
// with some permutation of the four colors.
bool matches_phi_up_to_permutation(const Region& region,
                                   const std::vector<Color>& coloring);

}  // namespace slablab
