// Region and tiling transformation: delete bad cells, inflate good cells,
// and map slab/mixed tilings to domino tilings of the transformed region.
//
// The literal construction inflates a good cell with view-plane coordinates
// (b, c) into a 45-degree rotated diamond.  We use the integerized form of
// that map: (u, w) = ((b + c - parity) / 2, (c - b + parity) / 2), keeping
// the view-axis coordinate h, and relabel (u, w, h) -> (x, y, z) so the view
// axis becomes the z axis of the transformed region.  The map is affine and
// orientation-preserving (determinant +1/2 before relabeling); two good
// cells are view-plane diagonal neighbors iff their images are lattice
// neighbors.
//
// Twists of slab and mixed tilings are twists of the transformed domino
// tiling; they are asserted integer (the transformed region of a cylinder
// along the view axis is again a cylinder along z).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slablab/coloring.hpp"
#include "slablab/tiling.hpp"

namespace slablab {

struct TransformResult {
  GoodPair pair;
  Region region;  // transformed region, in relabeled coordinates
  Tiling tiling;  // induced domino tiling of `region`
  // source good cell -> transformed cell, sorted by source cell
  std::vector<std::pair<Cell, Cell>> cell_map;
};

// Image of a single good cell (throws std::invalid_argument on a bad cell).
Cell transform_cell(const Cell& c, GoodPair pair);

// Transformed region: the images of the good cells of r.
Region transform_region(const Region& r, GoodPair pair);

// Transformed tiling.  t must be a slab or mixed tiling; for mixed tilings
// pair.axis must be z (vertical dominoes are only aligned with the z view).
TransformResult transform_tiling(const Tiling& t, GoodPair pair);

// Twist of the transformed tiling, asserted integer.  Requires the region to
// be a cylinder along pair.axis (and for mixed tilings pair.axis == z);
// throws std::invalid_argument otherwise.
std::int64_t twist_for_pair(const Tiling& t, GoodPair pair);

// The twist of a mixed tiling of a cylinder along z.
std::int64_t mixed_twist(const Tiling& t,
                         GoodPair pair = canonical_pair(Axis::Z));

struct TripleTwist {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend bool operator==(const TripleTwist&, const TripleTwist&) = default;
  std::string to_string() const;  // "(x,y,z)"
};

// Triple twist of a slab tiling of a box, using the canonical pairs
// (the green-containing pair of each view).  Other pair choices follow from
// complement negation.
TripleTwist triple_twist(const Tiling& t);

}  // namespace slablab
