#include "slablab/construct.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "slablab/symmetry.hpp"

namespace slablab {

namespace {

// Floor division (round toward minus infinity), b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

// ---------------------------------------------------------------------------
// Rigid staircase pattern.
//
// One 2N x 2N x 5 story consists of
//   * x-normal slab stacks on the two walls x = 0 and x = 2N-1: each y band
//     y in {2j, 2j+1} carries slabs at z in {0,1} and, for the outermost
//     bands (j = 0, N-1), z in {2,3}; for the inner bands z in {3,4};
//   * y-normal rails on the odd columns x in {2i+1, 2i+2}: stacks at the two
//     walls y = 0 and y = 2N-1 (z in {0,1} and {2,3}) plus single slabs at
//     y = 1 and y = 2N-2, z in {1,2};
//   * z-normal slabs: a top row over each outer y band (z = 4), a middle row
//     over each inner y band (z = 2), and a staircase over the odd columns:
//     rows y in {m, m+1} for m = 1..2N-3 at z in {0,3} for odd m and
//     z in {1,4} for even m.
// No two same-normal slabs are ever stacked along their normal, which is
// exactly the (local) condition for a slab tiling to admit no flip.
// ---------------------------------------------------------------------------

std::vector<Piece> rigid_story(int N) {
  std::vector<Piece> ps;
  const int W = 2 * N;
  for (int x : {0, W - 1})
    for (int j = 0; j < N; ++j) {
      const bool outer = j == 0 || j == N - 1;
      ps.push_back(make_slab({x, 2 * j, 0}, Axis::X));
      ps.push_back(make_slab({x, 2 * j, outer ? 2 : 3}, Axis::X));
    }
  for (int i = 0; i + 1 < N; ++i) {
    const int x = 2 * i + 1;
    for (int y : {0, W - 1}) {
      ps.push_back(make_slab({x, y, 0}, Axis::Y));
      ps.push_back(make_slab({x, y, 2}, Axis::Y));
    }
    ps.push_back(make_slab({x, 1, 1}, Axis::Y));
    ps.push_back(make_slab({x, W - 2, 1}, Axis::Y));
  }
  for (int i = 0; i < N; ++i) {
    ps.push_back(make_slab({2 * i, 0, 4}, Axis::Z));
    ps.push_back(make_slab({2 * i, W - 2, 4}, Axis::Z));
    for (int j = 1; j + 1 < N; ++j)
      ps.push_back(make_slab({2 * i, 2 * j, 2}, Axis::Z));
  }
  for (int i = 0; i + 1 < N; ++i)
    for (int m = 1; m <= W - 3; ++m)
      for (int z : (m % 2 == 1) ? std::array<int, 2>{0, 3}
                                : std::array<int, 2>{1, 4})
        ps.push_back(make_slab({2 * i + 1, m, z}, Axis::Z));
  return ps;
}

// ---------------------------------------------------------------------------
// Solenoid.
//
// Box 6n x 6n x 8n.  Two tubes of n^2 shells each:
//   * beta tube: square rings in the (x,z) plane, outer square [0,6n)^2 with
//     hole [2n,4n)^2, thickness axis y with y in [2n,4n);
//   * gamma tube: square rings in the (y,z) plane, outer [0,6n) x [2n,8n)
//     with hole [2n,4n) x [4n,6n), thickness axis x with x in [2n,4n).
// Ring i (0 = innermost) of a tube is the width-2 square ring with outer
// square of side S = 2n+4+4i anchored at 2n-2-2i (relative to the tube's
// outer corner); layer pair k occupies thickness layers {2n+2k, 2n+2k+1}.
// A flat shell (winding 0) is covered by pairs of thickness-normal slabs; a
// wound shell matches each of the ring's two boundary tracks cyclically, the
// matching phase selecting the chirality.  Everything else (alpha) is filled
// by horizontal slabs on the even-aligned 2x2 grid of every floor.
// ---------------------------------------------------------------------------

// Square ring in the (u,w) plane: outer [u0,u0+S) x [w0,w0+S), width 2,
// thickness axis v with layers {v0, v0+1}.  winding in {-1,0,+1}.
std::vector<Piece> ring_shell(Axis u, Axis w, Axis v, int u0, int w0, int S,
                              int v0, int winding) {
  std::vector<Piece> out;
  auto cell = [&](int cu, int cw, int cv) {
    Cell c{};
    c[u] = cu;
    c[w] = cw;
    c[v] = cv;
    return c;
  };
  if (winding == 0) {
    for (int a = u0; a < u0 + S; a += 2)
      for (int b = w0; b < w0 + S; b += 2) {
        const bool hole = a > u0 && a < u0 + S - 2 && b > w0 && b < w0 + S - 2;
        if (hole) continue;
        out.push_back(make_slab(cell(a, b, v0), v));
        out.push_back(make_slab(cell(a, b, v0 + 1), v));
      }
    return out;
  }
  // Boundary cycle of the square [a0,a0+L) x [b0,b0+L), counterclockwise in
  // (u,w), starting at the corner (a0,b0).
  auto track = [](int a0, int b0, int L) {
    std::vector<std::pair<int, int>> sq;
    for (int i = 0; i < L; ++i) sq.push_back({a0 + i, b0});
    for (int i = 1; i < L; ++i) sq.push_back({a0 + L - 1, b0 + i});
    for (int i = L - 2; i >= 0; --i) sq.push_back({a0 + i, b0 + L - 1});
    for (int i = L - 2; i >= 1; --i) sq.push_back({a0, b0 + i});
    return sq;
  };
  const int phase = winding > 0 ? 1 : 0;
  for (auto [a0, b0, L] : {std::array<int, 3>{u0, w0, S},
                           std::array<int, 3>{u0 + 1, w0 + 1, S - 2}}) {
    const auto sq = track(a0, b0, L);
    const int len = int(sq.size());
    for (int i = phase; i < phase + len; i += 2) {
      auto [ua, wa] = sq[std::size_t(i % len)];
      auto [ub, wb] = sq[std::size_t((i + 1) % len)];
      const int au = std::min(ua, ub), aw = std::min(wa, wb);
      const Axis normal = (ua != ub) ? w : u;
      out.push_back(make_slab(cell(au, aw, v0), normal));
    }
  }
  return out;
}

// Shells of one tube; `plane` gives the ring plane axes (u,w), `thick` the
// thickness axis, (tu0, tw0) the outer corner of the innermost ring's
// bounding square minus its margin -- see the formulas below.
std::vector<Piece> tube(int n, Axis u, Axis w, Axis v, int u_base, int w_base,
                        int v_base, const std::vector<AnnulusSpec>& shells) {
  std::vector<Piece> out;
  for (const AnnulusSpec& s : shells) {
    const int ring = s.index / n, layer = s.index % n;
    const int m = 2 * n - 2 - 2 * ring, S = 2 * n + 4 + 4 * ring;
    const auto shell =
        ring_shell(u, w, v, u_base + m, w_base + m, S, v_base + 2 * layer,
                   s.winding);
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

void fill_horizontal(const Region& box, std::vector<Piece>& ps) {
  std::vector<char> covered(box.size(), 0);
  for (const Piece& p : ps)
    for (const Cell& c : p.cells()) covered[std::size_t(box.index_of(c))] = 1;
  const Box b = box.bounds();
  for (int z = b.lo.z; z <= b.hi.z; ++z)
    for (int x = b.lo.x; x <= b.hi.x; x += 2)
      for (int y = b.lo.y; y <= b.hi.y; y += 2) {
        if (covered[std::size_t(box.index_of({x, y, z}))]) continue;
        ps.push_back(make_slab({x, y, z}, Axis::Z));
        for (const Cell& c : ps.back().cells())
          covered[std::size_t(box.index_of(c))] = 1;
      }
}

}  // namespace

std::vector<AnnulusSpec> solenoid_windings(int n, int flux) {
  if (std::abs(flux) > n * n)
    throw std::invalid_argument("solenoid flux exceeds n^2");
  std::vector<AnnulusSpec> out(std::size_t(n) * std::size_t(n));
  const int sign = flux < 0 ? -1 : 1;
  for (int i = 0; i < n * n; ++i)
    out[std::size_t(i)] = {i, i < std::abs(flux) ? sign : 0};
  return out;
}

Tiling rigid_pattern(int N, int layers) {
  if (N < 3) throw std::invalid_argument("rigid_pattern requires N >= 3");
  if (layers < 1) throw std::invalid_argument("rigid_pattern requires layers >= 1");
  std::vector<Piece> ps;
  const auto story = rigid_story(N);
  for (int k = 0; k < layers; ++k)
    for (const Piece& p : story)
      ps.push_back(Piece{p.kind, p.axis, p.anchor + Cell{0, 0, 5 * k}});
  return make_checked(Region::box(2 * N, 2 * N, 5 * layers), Family::slab,
                      std::move(ps));
}

Tiling solenoid(int n, FluxPair flux) {
  if (n < 1) throw std::invalid_argument("solenoid requires n >= 1");
  const auto wind_u = solenoid_windings(n, flux.u);
  const auto wind_v = solenoid_windings(n, flux.v);
  Region box = Region::box(6 * n, 6 * n, 8 * n);
  // beta tube: rings in (x,z), thickness y; gamma tube: rings in (y,z),
  // thickness x, shifted up by 2n in z.
  std::vector<Piece> ps = tube(n, Axis::X, Axis::Z, Axis::Y, 0, 0, 2 * n,
                               wind_u);
  const auto gamma = tube(n, Axis::Y, Axis::Z, Axis::X, 0, 2 * n, 2 * n,
                          wind_v);
  ps.insert(ps.end(), gamma.begin(), gamma.end());
  fill_horizontal(box, ps);
  return make_checked(std::move(box), Family::slab, std::move(ps));
}

const int kComposedSign[3] = {+1, +1, +1};

Tiling composed(int n, const TripleTwist& t) {
  if (n < 1) throw std::invalid_argument("composed requires n >= 1");
  const std::int64_t bound = 2 * std::int64_t(n) * n * n * n;
  for (std::int64_t v : {t.x, t.y, t.z}) {
    if (v % 2 != 0)
      throw std::invalid_argument("composed requires even twist components");
    if (v < -bound || v > bound)
      throw std::invalid_argument("composed twist component out of range");
  }
  const int L = 8 * n;
  Region cube = Region::box(2 * L, 2 * L, 2 * L);
  std::vector<Piece> ps;

  // Subcube placement: per axis j, two solenoids rotated so their z-twist
  // lands on axis j; the remaining two subcubes stay all-horizontal (they
  // are padded by fill_horizontal at the end, like everything else).
  struct Slot {
    Axis axis;
    int which;        // 0: flux (n^2, floor), 1: flux (1, remainder)
    Cell subcube;     // subcube index in {0,1}^3
  };
  const Slot slots[6] = {
      {Axis::Z, 0, {0, 0, 0}}, {Axis::Z, 1, {1, 1, 0}},
      {Axis::X, 0, {1, 0, 0}}, {Axis::X, 1, {0, 1, 1}},
      {Axis::Y, 0, {0, 1, 0}}, {Axis::Y, 1, {1, 0, 1}},
  };
  const std::int64_t requested[3] = {t.x, t.y, t.z};
  for (const Slot& s : slots) {
    const int j = int(s.axis);
    const std::int64_t tj = requested[j] * kComposedSign[j];
    const std::int64_t n2 = std::int64_t(n) * n;
    const std::int64_t q = floor_div(tj, 2 * n2);
    FluxPair flux{};
    if (s.which == 0) {
      flux = {int(n2), int(q)};
    } else {
      flux = {1, int((tj - 2 * n2 * q) / 2)};
    }
    Tiling part = solenoid(n, flux);
    // Rotate z -> axis (cyclic, determinant +1), then translate the image
    // box to the subcube corner.  Cyclic rotations map the canonical z pair
    // to the canonical pair of the target axis, and the subcube corners are
    // even, so the twist transports with sign +1 onto axis j.
    Symmetry rot = Symmetry::identity();
    if (s.axis == Axis::X)
      rot = Symmetry({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}, Cell{0, 0, 0});
    else if (s.axis == Axis::Y)
      rot = Symmetry({{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}, Cell{0, 0, 0});
    Tiling placed = rot.then(Symmetry::translation(
                                 {s.subcube.x * L, s.subcube.y * L,
                                  s.subcube.z * L}))
                        .apply(part);
    ps.insert(ps.end(), placed.pieces().begin(), placed.pieces().end());
  }
  fill_horizontal(cube, ps);
  return make_checked(std::move(cube), Family::slab, std::move(ps));
}

}  // namespace slablab
