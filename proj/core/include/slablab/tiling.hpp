// Tilings: a region covered exactly by pieces from one family.
//
// Families:
//   domino - every piece is a domino, any axis;
//   slab   - every piece is a slab, any normal;
//   mixed  - horizontal slabs (normal z) and vertical dominoes (axis z) only.
//
// A Tiling keeps a reference to its region; pieces always live in that
// region's coordinates.  Tilings are immutable once built.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slablab/piece.hpp"
#include "slablab/region.hpp"

namespace slablab {

enum class Family : std::uint8_t { domino = 0, slab = 1, mixed = 2 };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws on bad input

struct Violation {
  std::string message;
  std::optional<Piece> piece;
  std::optional<Cell> cell;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class Tiling {
 public:
  // Builds without validating; pieces are sorted.  Use validate() or
  // make_checked() to establish correctness.
  Tiling(Region region, Family family, std::vector<Piece> pieces);

  const Region& region() const { return region_; }
  Family family() const { return family_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  // Index into pieces() of the piece covering `c`, or -1.  Meaningful for
  // valid tilings (the last writer wins when pieces overlap).
  int piece_at(const Cell& c) const;

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.family_ == b.family_ && a.region_ == b.region_ &&
           a.pieces_ == b.pieces_;
  }

 private:
  Region region_;
  Family family_;
  std::vector<Piece> pieces_;
  std::vector<std::int32_t> owner_;  // region cell index -> piece index
};

// A flip: a local move removing two (or, in mixed tilings, up to four)
// pieces and placing an alternative set back in the same cells.
struct FlipMove {
  std::vector<Piece> removed;
  std::vector<Piece> placed;
  Tiling result;
};

// Family membership rule for a single piece.
bool allowed_in_family(const Piece& p, Family f);

// Full validation: family membership, containment, exact cover.
ValidationReport validate(const Tiling& t);

// Validating constructor; throws std::invalid_argument with the first
// violation's message when the tiling is not valid.
Tiling make_checked(Region region, Family family, std::vector<Piece> pieces);

// Cuts every vertical slab of a slab tiling of a z-cylinder into two vertical
// dominoes, producing a mixed tiling.  Horizontal slabs are kept.
Tiling slice_vertical_slabs(const Tiling& slab_tiling);

}  // namespace slablab
