#include "slablab/twist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "slablab/geometry.hpp"

namespace slablab {

std::int64_t Quarters::integer_value() const {
  if (!is_integer()) {
    throw std::logic_error("twist value " + to_string() + " is not an integer");
  }
  return quarters / 4;
}

std::string Quarters::to_string() const {
  if (quarters % 4 == 0) return std::to_string(quarters / 4);
  if (quarters % 2 == 0) return std::to_string(quarters / 2) + "/2";
  return std::to_string(quarters) + "/4";
}

namespace {

// Sign of v(d): +1 when v(d) = +e_axis (anchor white, far cube black).
inline int orientation_sign(const Piece& d) {
  return black_cell(d.anchor + unit(d.axis)) ? 1 : -1;
}

inline int effect_unchecked(const Piece& d0, const Piece& d1) {
  // Open shadow overlap on the plane x = 0: the y extents (d0 spans 2) and
  // the z extents (d1 spans 2) must overlap openly.
  if (d1.anchor.y != d0.anchor.y && d1.anchor.y != d0.anchor.y + 1) return 0;
  if (d1.anchor.z != d0.anchor.z && d1.anchor.z + 1 != d0.anchor.z) return 0;
  if (d0.anchor.x == d1.anchor.x) return 0;  // would overlap physically
  // (v(d_lo) x v(d_hi)) . e_x with transverse(x) = (y, z) in cyclic order:
  // e_y x e_z = +e_x, so the product of signs flips when d1 comes first.
  const int s = orientation_sign(d0) * orientation_sign(d1);
  return d0.anchor.x < d1.anchor.x ? s : -s;
}

}  // namespace

int effect(const Piece& d0, const Piece& d1) {
  if (d0.kind != PieceKind::domino || d0.axis != Axis::Y) {
    throw std::invalid_argument("effect: d0 must be a domino parallel to e_y");
  }
  if (d1.kind != PieceKind::domino || d1.axis != Axis::Z) {
    throw std::invalid_argument("effect: d1 must be a domino parallel to e_z");
  }
  return effect_unchecked(d0, d1);
}

Quarters twist(const Tiling& t) {
  if (t.family() != Family::domino) {
    throw std::invalid_argument("twist: expected a domino tiling");
  }
  std::vector<const Piece*> ys;
  std::vector<const Piece*> zs;
  for (const Piece& p : t.pieces()) {
    if (p.axis == Axis::Y) ys.push_back(&p);
    else if (p.axis == Axis::Z) zs.push_back(&p);
  }
  std::int64_t sum = 0;
  for (const Piece* d0 : ys) {
    for (const Piece* d1 : zs) sum += effect_unchecked(*d0, *d1);
  }
  const Quarters tw{sum};
  if (!tw.is_integer() && t.region().is_cylinder_along(Axis::Z)) {
    throw std::logic_error("twist: non-integer value " + tw.to_string() +
                           " on a cylinder along z");
  }
  return tw;
}

std::vector<FlipMove> domino_flip_moves(const Tiling& t) {
  if (t.family() != Family::domino) {
    throw std::invalid_argument("domino_flip_moves: expected a domino tiling");
  }
  std::vector<FlipMove> moves;
  for (const Piece& d : t.pieces()) {
    if (d.kind != PieceKind::domino) continue;
    for (Axis b : kAxes) {
      if (b == d.axis) continue;
      // Parallel neighbor one step along b; anchors increase, so each
      // unordered pair is found exactly once.
      const Piece other = make_domino(d.anchor + unit(b), d.axis);
      const int oi = t.piece_at(other.anchor);
      if (oi < 0 || t.pieces()[std::size_t(oi)] != other) continue;
      std::vector<Piece> pieces = t.pieces();
      pieces.erase(std::remove_if(pieces.begin(), pieces.end(),
                                  [&](const Piece& p) {
                                    return p == d || p == other;
                                  }),
                   pieces.end());
      std::vector<Piece> placed = {make_domino(d.anchor, b),
                                   make_domino(d.anchor + unit(d.axis), b)};
      pieces.insert(pieces.end(), placed.begin(), placed.end());
      moves.push_back(FlipMove{{d, other},
                               placed,
                               Tiling(t.region(), t.family(), std::move(pieces))});
    }
  }
  return moves;
}

}  // namespace slablab
