// Pieces: dominoes (2x1x1) and slabs (2x2x1).
//
// A piece is stored as (kind, axis, anchor).  The anchor is the
// lexicographically smallest cell of the piece.  For a domino the axis is the
// long axis; for a slab it is the normal of the 2x2 face.
//
// Orientation language in floor diagrams (z = stacking axis): a domino with
// axis z and a slab with normal x or y are "vertical" (they cross two
// floors); every other piece is "horizontal" (contained in one floor).

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "slablab/geometry.hpp"

namespace slablab {

enum class PieceKind : std::uint8_t { domino = 0, slab = 1 };

struct Piece {
  PieceKind kind = PieceKind::domino;
  Axis axis = Axis::X;
  Cell anchor;

  friend constexpr auto operator<=>(const Piece&, const Piece&) = default;

  constexpr int cell_count() const { return kind == PieceKind::domino ? 2 : 4; }

  // The piece's cells in lexicographic order; only the first cell_count()
  // entries are meaningful.
  std::array<Cell, 4> cells() const;

  // Number of floors spanned along `stack`: 1 for horizontal pieces, 2 for
  // vertical ones.
  bool vertical_along(Axis stack) const;
};

Piece make_domino(Cell anchor, Axis long_axis);
Piece make_slab(Cell anchor, Axis normal);

std::string to_string(const Piece& p);

}  // namespace slablab
