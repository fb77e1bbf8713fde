// Isometries of the lattice: w -> v0 + Q w with Q a signed permutation
// matrix.  These map unit cubes to unit cubes; cell images are re-normalized
// to the minimum-corner convention.

#pragma once

#include <array>
#include <vector>

#include "slablab/coloring.hpp"
#include "slablab/region.hpp"
#include "slablab/tiling.hpp"

namespace slablab {

class Symmetry {
 public:
  // Row-major signed permutation; defaults to the identity.
  Symmetry();
  Symmetry(const std::array<std::array<int, 3>, 3>& q, Cell v0);

  static Symmetry identity();
  static Symmetry translation(Cell v0);
  // Reflection through the coordinate plane {a = 0} (as a map of space;
  // compose with a translation to fix a particular box).
  static Symmetry reflection(Axis a);
  // Rotation by 90 degrees counterclockwise about the z axis: (x,y,z) -> (-y,x,z).
  static Symmetry rotation_z();
  // All 48 signed permutations (v0 = 0), in a fixed deterministic order.
  static std::vector<Symmetry> all_signed_permutations();

  int sign() const;  // determinant, +1 or -1
  Symmetry then(const Symmetry& second) const;  // second(first(w))
  Symmetry inverse() const;

  // Image of a lattice point.
  Cell apply_point(const Cell& p) const;
  // Image of a unit cube, returned as its minimum corner.
  Cell apply_cell(const Cell& c) const;
  // Axis image under |Q| and whether the axis direction is reversed.
  Axis apply_axis(Axis a) const;
  bool reverses(Axis a) const;

  Region apply(const Region& r) const;
  Piece apply(const Piece& p) const;
  // The image tiling.  The family tag is preserved when still applicable
  // (mixed tilings require the z axis to map to +-z); otherwise throws.
  Tiling apply(const Tiling& t) const;
  // Transport of a good pair: the image pair k' with good(k') = q[good(k)].
  GoodPair apply(const GoodPair& pair) const;

 private:
  std::array<std::array<int, 3>, 3> q_;
  Cell v0_;
};

}  // namespace slablab
