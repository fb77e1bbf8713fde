// Cubiculated regions: finite sets of unit cells with O(1) membership tests.
//
// Regions are immutable after construction and cheap to copy (shared
// representation), so they can be referenced by many tilings at once.
// Derived predicates (box / cylinder recognition) are computed from the cell
// set on demand and never stored stale.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "slablab/geometry.hpp"

namespace slablab {

class Region {
 public:
  Region();  // empty region

  // An axis-aligned box of the given extents whose minimum corner is `origin`.
  static Region box(int nx, int ny, int nz, Cell origin = {0, 0, 0});
  // An arbitrary cell set; throws std::invalid_argument on duplicates.
  static Region from_cells(std::vector<Cell> cells);
  // The cylinder D x [0,height) over a planar cell set D.
  static Region disk_prism(const std::vector<std::array<int, 2>>& disk, int height);

  const std::vector<Cell>& cells() const;  // sorted lexicographically
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(const Cell& c) const { return index_of(c) >= 0; }
  // Index into cells() or -1 when absent.
  int index_of(const Cell& c) const;
  Box bounds() const;  // valid only when non-empty

  bool operator==(const Region& o) const;

  // True iff the region is exactly its bounding box.
  bool is_box() const;

  // True iff the region is D x [h0,h0+N) along `a` for a quadriculated disk D
  // (connected, simply connected footprint; every column spans the same
  // height interval).
  bool is_cylinder_along(Axis a) const;

  // Restriction to the cells whose closed unit cube lies inside the open box
  // with real corners `corner_lo`, `corner_hi`: cell c survives iff
  // corner_lo < c and c + 1 < corner_hi on every coordinate.  (Unlike Box,
  // the corners here are points of space, not cells.)
  Region open_interior_cells(const Cell& corner_lo, const Cell& corner_hi) const;

 private:
  struct Impl;
  explicit Region(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace slablab
