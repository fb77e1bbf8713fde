// The effect function between domino pairs and the twist of a domino tiling.
//
// Conventions (fixed once, calibrated by the figure fixtures in the tests):
//   * the checkerboard coloring calls cell (x,y,z) black iff x+y+z is even;
//   * v(d) is the unit vector pointing from the white cube of d to its black
//     cube;
//   * effect(d0, d1) is defined for d0 a horizontal domino parallel to e_y
//     and d1 a vertical domino parallel to e_z.  It is 0 unless the open
//     projections of d0 and d1 onto the plane x = 0 intersect; otherwise it
//     equals sigma * ((v(d_lo) x v(d_hi)) . e_x), where (d_lo, d_hi) orders
//     the pair by the x coordinate of the centers and sigma = +1.
//
// The twist is 1/4 of the sum of effect(d0, d1) over all pairs with d0
// parallel to e_y and d1 parallel to e_z; dominoes parallel to e_x are
// spectators.  The twist of a tiling of a cylinder D x [0,N) (stacked along
// z) is an integer; twist() asserts this.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slablab/tiling.hpp"

namespace slablab {

// Exact quarter-integer value.
struct Quarters {
  std::int64_t quarters = 0;  // the value is quarters / 4

  bool is_integer() const { return quarters % 4 == 0; }
  std::int64_t integer_value() const;  // throws std::logic_error if fractional
  double value() const { return double(quarters) / 4.0; }
  std::string to_string() const;  // "-1", "1/2", "7/4", ...

  friend bool operator==(const Quarters&, const Quarters&) = default;
  friend auto operator<=>(const Quarters&, const Quarters&) = default;
};

// Effect of the vertical domino d1 on the horizontal domino d0.  Requires
// d0 to be a domino with axis y and d1 a domino with axis z (throws
// std::invalid_argument otherwise).
int effect(const Piece& d0, const Piece& d1);

// Twist of a valid domino tiling.  When the region is a cylinder along z the
// result is asserted to be an integer (std::logic_error on violation: that
// would be an implementation bug, not a data error).
Quarters twist(const Tiling& t);

// All domino flips available in t: each pair of parallel dominoes jointly
// filling a 2x2x1 box yields exactly one alternative placement.
std::vector<FlipMove> domino_flip_moves(const Tiling& t);

}  // namespace slablab
