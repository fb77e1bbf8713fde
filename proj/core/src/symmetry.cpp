#include "slablab/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace slablab {

namespace {

std::array<std::array<int, 3>, 3> identity_q() {
  return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

}  // namespace

Symmetry::Symmetry() : q_(identity_q()), v0_{0, 0, 0} {}

Symmetry::Symmetry(const std::array<std::array<int, 3>, 3>& q, Cell v0)
    : q_(q), v0_(v0) {
  // Each row and column must contain exactly one +-1.
  for (int i = 0; i < 3; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < 3; ++j) {
      if (q_[i][j] != 0) {
        if (std::abs(q_[i][j]) != 1) throw std::invalid_argument("symmetry: bad matrix");
        ++row;
      }
      if (q_[j][i] != 0) ++col;
    }
    if (row != 1 || col != 1) throw std::invalid_argument("symmetry: not a signed permutation");
  }
}

Symmetry Symmetry::identity() { return Symmetry(); }

Symmetry Symmetry::translation(Cell v0) { return Symmetry(identity_q(), v0); }

Symmetry Symmetry::reflection(Axis a) {
  auto q = identity_q();
  q[int(a)][int(a)] = -1;
  return Symmetry(q, {0, 0, 0});
}

Symmetry Symmetry::rotation_z() {
  return Symmetry({{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}, {0, 0, 0});
}

std::vector<Symmetry> Symmetry::all_signed_permutations() {
  std::vector<Symmetry> out;
  out.reserve(48);
  std::array<int, 3> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    for (int signs = 0; signs < 8; ++signs) {
      std::array<std::array<int, 3>, 3> q{};
      for (int i = 0; i < 3; ++i) {
        q[i][perm[std::size_t(i)]] = (signs >> i) & 1 ? -1 : 1;
      }
      out.push_back(Symmetry(q, {0, 0, 0}));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int Symmetry::sign() const {
  int det = 0;
  for (int j0 = 0; j0 < 3; ++j0) {
    if (q_[0][j0] == 0) continue;
    const int j1 = (j0 + 1) % 3, j2 = (j0 + 2) % 3;
    det = q_[0][j0] * (q_[1][j1] * q_[2][j2] - q_[1][j2] * q_[2][j1]);
  }
  return det;
}

Symmetry Symmetry::then(const Symmetry& second) const {
  std::array<std::array<int, 3>, 3> q{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) q[i][j] += second.q_[i][k] * q_[k][j];
  return Symmetry(q, second.apply_point(v0_));
}

Symmetry Symmetry::inverse() const {
  std::array<std::array<int, 3>, 3> q{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q[i][j] = q_[j][i];
  Symmetry inv(q, {0, 0, 0});
  const Cell back = inv.apply_point(v0_);
  inv.v0_ = {-back.x, -back.y, -back.z};
  return inv;
}

Cell Symmetry::apply_point(const Cell& p) const {
  Cell out = v0_;
  const int in[3] = {p.x, p.y, p.z};
  int acc[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc[i] += q_[i][j] * in[j];
  out.x += acc[0];
  out.y += acc[1];
  out.z += acc[2];
  return out;
}

Cell Symmetry::apply_cell(const Cell& c) const {
  // Min corner of the image cube: rows with a negative entry shift by -1.
  Cell out = apply_point(c);
  for (int i = 0; i < 3; ++i) {
    int rowmin = 0;
    for (int j = 0; j < 3; ++j) rowmin += std::min(q_[i][j], 0);
    (i == 0 ? out.x : i == 1 ? out.y : out.z) += rowmin;
  }
  return out;
}

Axis Symmetry::apply_axis(Axis a) const {
  for (int i = 0; i < 3; ++i) {
    if (q_[i][int(a)] != 0) return Axis(i);
  }
  throw std::logic_error("symmetry: degenerate matrix");
}

bool Symmetry::reverses(Axis a) const {
  for (int i = 0; i < 3; ++i) {
    if (q_[i][int(a)] != 0) return q_[i][int(a)] < 0;
  }
  throw std::logic_error("symmetry: degenerate matrix");
}

Region Symmetry::apply(const Region& r) const {
  std::vector<Cell> cells;
  cells.reserve(r.size());
  for (const Cell& c : r.cells()) cells.push_back(apply_cell(c));
  return Region::from_cells(std::move(cells));
}

Piece Symmetry::apply(const Piece& p) const {
  const Axis image_axis = apply_axis(p.axis);
  const auto cs = p.cells();
  Cell anchor = apply_cell(cs[0]);
  for (int k = 1; k < p.cell_count(); ++k) {
    anchor = std::min(anchor, apply_cell(cs[std::size_t(k)]));
  }
  return Piece{p.kind, image_axis, anchor};
}

Tiling Symmetry::apply(const Tiling& t) const {
  std::vector<Piece> pieces;
  pieces.reserve(t.pieces().size());
  for (const Piece& p : t.pieces()) pieces.push_back(apply(p));
  return make_checked(apply(t.region()), t.family(), std::move(pieces));
}

GoodPair Symmetry::apply(const GoodPair& pair) const {
  const Axis image_axis = apply_axis(pair.axis);
  // Transport the good predicate through the map: evaluate the image parity
  // on the image of one good cell.
  Cell probe{0, 0, 0};
  const auto [b, c] = transverse(pair.axis);
  probe[b] = pair.parity;  // (b+c) parity == pair.parity, so probe is good
  const Cell image = apply_cell(probe);
  const auto [ib, ic] = transverse(image_axis);
  return GoodPair{image_axis, (((image[ib] + image[ic]) % 2) + 2) % 2};
}

}  // namespace slablab
