#include "slablab/piece.hpp"

#include <utility>

namespace slablab {

std::array<Cell, 4> Piece::cells() const {
  std::array<Cell, 4> out{};
  if (kind == PieceKind::domino) {
    out[0] = anchor;
    out[1] = anchor + unit(axis);
  } else {
    const auto [b, c] = transverse(axis);
    out[0] = anchor;
    out[1] = anchor + unit(b);
    out[2] = anchor + unit(c);
    out[3] = anchor + unit(b) + unit(c);
    if (out[2] < out[1]) std::swap(out[1], out[2]);
  }
  return out;
}

bool Piece::vertical_along(Axis stack) const {
  if (kind == PieceKind::domino) return axis == stack;
  return axis != stack;  // slab crosses floors unless its normal is the stack axis
}

Piece make_domino(Cell anchor, Axis long_axis) {
  return Piece{PieceKind::domino, long_axis, anchor};
}

Piece make_slab(Cell anchor, Axis normal) {
  return Piece{PieceKind::slab, normal, anchor};
}

std::string to_string(const Piece& p) {
  return std::string(p.kind == PieceKind::domino ? "domino/" : "slab/") +
         axis_name(p.axis) + "@" + to_string(p.anchor);
}

}  // namespace slablab
