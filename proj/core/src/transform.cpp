#include "slablab/transform.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

#include "slablab/twist.hpp"

namespace slablab {

Cell transform_cell(const Cell& c, GoodPair pair) {
  if (!is_good(c, pair)) {
    throw std::invalid_argument("transform_cell: " + to_string(c) +
                                " is not a good cell for " + pair.name());
  }
  const auto [b, c_axis] = transverse(pair.axis);
  const int cb = c[b];
  const int cc = c[c_axis];
  // (b + c - parity) is even exactly on good cells; division is exact.
  const int u = (cb + cc - pair.parity) / 2;
  const int w = (cc - cb + pair.parity) / 2;
  return Cell{u, w, c[pair.axis]};
}

Region transform_region(const Region& r, GoodPair pair) {
  std::vector<Cell> image;
  image.reserve(r.size() / 2);
  for (const Cell& c : r.cells()) {
    if (is_good(c, pair)) image.push_back(transform_cell(c, pair));
  }
  return Region::from_cells(std::move(image));
}

namespace {

// Builds the domino spanning two lattice-adjacent cells.
Piece domino_between(const Cell& a, const Cell& b) {
  const Cell lo = a < b ? a : b;
  const Cell hi = a < b ? b : a;
  const Cell d = hi - lo;
  for (Axis axis : kAxes) {
    if (d == unit(axis)) return make_domino(lo, axis);
  }
  throw std::logic_error("transform: image cells " + to_string(a) + ", " +
                         to_string(b) + " are not adjacent");
}

}  // namespace

TransformResult transform_tiling(const Tiling& t, GoodPair pair) {
  if (t.family() == Family::domino) {
    throw std::invalid_argument("transform_tiling: expected a slab or mixed tiling");
  }
  if (t.family() == Family::mixed && pair.axis != Axis::Z) {
    throw std::invalid_argument(
        "transform_tiling: mixed tilings transform only under z-view pairs");
  }
  Region image = transform_region(t.region(), pair);
  std::vector<Piece> dominoes;
  dominoes.reserve(t.pieces().size());
  for (const Piece& p : t.pieces()) {
    const auto cs = p.cells();
    std::array<Cell, 2> good{};
    int n_good = 0;
    for (int k = 0; k < p.cell_count(); ++k) {
      if (is_good(cs[std::size_t(k)], pair)) {
        if (n_good < 2) good[std::size_t(n_good)] = cs[std::size_t(k)];
        ++n_good;
      }
    }
    if (p.kind == PieceKind::slab) {
      // A slab covers all four colors, hence exactly two good cells.
      if (n_good != 2) {
        throw std::logic_error("transform: slab with " + std::to_string(n_good) +
                               " good cells");
      }
      dominoes.push_back(domino_between(transform_cell(good[0], pair),
                                        transform_cell(good[1], pair)));
    } else {
      // A vertical domino has both cells good or both bad (goodness for the
      // z view does not depend on z); it maps to a vertical domino or
      // vanishes.
      if (n_good == 2) {
        dominoes.push_back(domino_between(transform_cell(good[0], pair),
                                          transform_cell(good[1], pair)));
      } else if (n_good != 0) {
        throw std::logic_error("transform: vertical domino with one good cell");
      }
    }
  }
  TransformResult out{pair, image,
                      make_checked(image, Family::domino, std::move(dominoes)),
                      {}};
  out.cell_map.reserve(image.size());
  for (const Cell& c : t.region().cells()) {
    if (is_good(c, pair)) out.cell_map.emplace_back(c, transform_cell(c, pair));
  }
  return out;
}

std::int64_t twist_for_pair(const Tiling& t, GoodPair pair) {
  if (!t.region().is_cylinder_along(pair.axis)) {
    throw std::invalid_argument(
        "twist_for_pair: region is not a cylinder along " +
        std::string(1, axis_name(pair.axis)) +
        "; the twist is not guaranteed to be an integer");
  }
  return twist(transform_tiling(t, pair).tiling).integer_value();
}

std::int64_t mixed_twist(const Tiling& t, GoodPair pair) {
  if (t.family() != Family::mixed) {
    throw std::invalid_argument("mixed_twist: expected a mixed tiling");
  }
  return twist_for_pair(t, pair);
}

std::string TripleTwist::to_string() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
         std::to_string(z) + ")";
}

TripleTwist triple_twist(const Tiling& t) {
  if (t.family() != Family::slab) {
    throw std::invalid_argument("triple_twist: expected a slab tiling");
  }
  if (!t.region().is_box()) {
    throw std::invalid_argument("triple_twist: the region is not a box");
  }
  return TripleTwist{twist_for_pair(t, canonical_pair(Axis::X)),
                     twist_for_pair(t, canonical_pair(Axis::Y)),
                     twist_for_pair(t, canonical_pair(Axis::Z))};
}

}  // namespace slablab
