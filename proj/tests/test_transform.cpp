#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "slablab/codec.hpp"
#include "slablab/coloring.hpp"
#include "slablab/enumerate.hpp"
#include "slablab/flipgraph.hpp"
#include "slablab/symmetry.hpp"
#include "slablab/transform.hpp"
#include "slablab/twist.hpp"

using namespace slablab;

namespace {

Symmetry box_fix_reflection(const Region& box, Axis a) {
  Cell shift{0, 0, 0};
  shift[a] = box.bounds().extent(a);
  return Symmetry::reflection(a).then(Symmetry::translation(shift));
}

Tiling all_horizontal(const Region& box) {
  std::vector<Piece> pieces;
  const Box b = box.bounds();
  for (int z = b.lo.z; z <= b.hi.z; ++z)
    for (int y = b.lo.y; y + 1 <= b.hi.y; y += 2)
      for (int x = b.lo.x; x + 1 <= b.hi.x; x += 2)
        pieces.push_back(make_slab({x, y, z}, Axis::Z));
  return make_checked(box, Family::slab, std::move(pieces));
}

}  // namespace

TEST_CASE("transform of the cube keeps one cell per good column") {
  const Region img = transform_region(Region::box(2, 2, 2),
                                      canonical_pair(Axis::Z));
  CHECK(img == Region::from_cells({{0, 0, 0}, {1, 0, 0}, {0, 0, 1},
                                   {1, 0, 1}}));
  CHECK(transform_cell({0, 0, 0}, canonical_pair(Axis::Z)) == Cell{0, 0, 0});
  CHECK(transform_cell({1, 1, 0}, canonical_pair(Axis::Z)) == Cell{1, 0, 0});
  CHECK_THROWS_AS(transform_cell({1, 0, 0}, canonical_pair(Axis::Z)),
                  std::invalid_argument);
}

TEST_CASE("the transformed 6x6x6 box has 108 cells and a bijective cell map") {
  const Region box = Region::box(6, 6, 6);
  for (Axis a : kAxes) {
    const Region img = transform_region(box, canonical_pair(a));
    CHECK(img.size() == 108);
  }
  const Tiling t = load_fixture_tiling("exemplar_6x6x6.json");
  const TransformResult res = transform_tiling(t, canonical_pair(Axis::Z));
  CHECK(res.cell_map.size() == 108);
  std::set<Cell> sources, images;
  for (const auto& [from, to] : res.cell_map) {
    CHECK(is_good(from, res.pair));
    CHECK(res.region.contains(to));
    sources.insert(from);
    images.insert(to);
  }
  CHECK(sources.size() == 108);
  CHECK(images.size() == 108);
}

TEST_CASE("transformed dominoes occupy lattice-adjacent cells") {
  const Tiling t = load_fixture_tiling("exemplar_6x6x6.json");
  for (Axis a : kAxes) {
    const TransformResult res = transform_tiling(t, canonical_pair(a));
    CHECK(validate(res.tiling).ok());
    CHECK(res.tiling.family() == Family::domino);
    for (const Piece& p : res.tiling.pieces()) {
      const Cell c0 = p.cells()[0], c1 = p.cells()[1];
      CHECK(std::abs(c0.x - c1.x) + std::abs(c0.y - c1.y) +
                std::abs(c0.z - c1.z) == 1);
    }
  }
}

TEST_CASE("slab orientation decides transformed domino verticality") {
  const Tiling t = load_fixture_tiling("exemplar_6x6x6.json");
  const TransformResult res = transform_tiling(t, canonical_pair(Axis::Z));
  // One domino per slab, and the piece counts match orientation classes.
  CHECK(res.tiling.pieces().size() == t.pieces().size());
  std::size_t vertical_slabs = 0, vertical_dominoes = 0;
  for (const Piece& p : t.pieces()) vertical_slabs += p.axis != Axis::Z;
  for (const Piece& p : res.tiling.pieces())
    vertical_dominoes += p.axis == Axis::Z;
  CHECK(vertical_slabs == vertical_dominoes);
}

TEST_CASE("an all-horizontal tiling transforms to twist zero everywhere") {
  const Tiling t = all_horizontal(Region::box(6, 6, 6));
  CHECK(triple_twist(t) == TripleTwist{0, 0, 0});
  const TransformResult res = transform_tiling(t, canonical_pair(Axis::Z));
  for (const Piece& p : res.tiling.pieces()) CHECK(p.axis != Axis::Z);
}

TEST_CASE("the box exemplar realizes per-pair twists (0, 0, +2)") {
  const Tiling t = load_fixture_tiling("exemplar_6x6x6.json");
  CHECK(twist_for_pair(t, canonical_pair(Axis::Z)) == 2);
  CHECK(twist_for_pair(t, canonical_pair(Axis::Y)) == 0);
  CHECK(twist_for_pair(t, canonical_pair(Axis::X)) == 0);
  CHECK(triple_twist(t) == TripleTwist{0, 0, 2});
  CHECK(triple_twist(t).to_string() == "(0,0,2)");
}

TEST_CASE("slicing before transforming yields the same domino tiling") {
  const Tiling t = load_fixture_tiling("exemplar_6x6x6.json");
  const Tiling mixed = slice_vertical_slabs(t);
  const GoodPair k = canonical_pair(Axis::Z);
  const Code direct = canonical_encode(transform_tiling(t, k).tiling);
  const Code via_mixed = canonical_encode(transform_tiling(mixed, k).tiling);
  CHECK(direct == via_mixed);
  CHECK(mixed_twist(mixed, k) == 2);
  CHECK(mixed_twist(mixed, k.complement()) == -2);
}

TEST_CASE("mixed transforms demand the z view") {
  const Tiling t = make_checked(
      Region::box(2, 2, 2), Family::mixed,
      {make_slab({0, 0, 0}, Axis::Z), make_slab({0, 0, 1}, Axis::Z)});
  CHECK(mixed_twist(t) == 0);
  CHECK_THROWS_AS(transform_tiling(t, canonical_pair(Axis::X)),
                  std::invalid_argument);
}

TEST_CASE("triple twist refuses non-box regions") {
  const Region disk = load_fixture_region("disk_l_x2.json");
  const Tiling t = enumerate_up_to(disk, Family::slab, 1)[0];
  CHECK_THROWS_AS(triple_twist(t), std::invalid_argument);
}

TEST_CASE("twist_for_pair refuses non-cylinder views") {
  const Region disk = load_fixture_region("disk_l_x2.json");
  const Tiling t = enumerate_up_to(disk, Family::slab, 1)[0];
  CHECK_NOTHROW(twist_for_pair(t, canonical_pair(Axis::Z)));
  CHECK_THROWS_AS(twist_for_pair(t, canonical_pair(Axis::X)),
                  std::invalid_argument);
}

TEST_CASE("complement negation holds on every small mixed cylinder") {
  const std::vector<Region> corpus = {
      Region::box(2, 2, 2), Region::box(2, 2, 4), Region::box(2, 2, 6),
      Region::box(3, 3, 2), Region::box(4, 4, 2),
      load_fixture_region("disk_l_x2.json"),
      load_fixture_region("disk_t_x2.json"),
  };
  const GoodPair k = canonical_pair(Axis::Z);
  std::uint64_t total = 0;
  for (const Region& r : corpus) {
    REQUIRE(r.size() <= 48);
    enumerate(r, Family::mixed, [&](const Tiling& t) {
      ++total;
      CHECK(mixed_twist(t, k) == -mixed_twist(t, k.complement()));
      return true;
    });
  }
  CHECK(total > 50);  // exhaustive sweep actually covered the corpus
}

TEST_CASE("slab and mixed flips move the transformed tiling by at most one domino flip") {
  for (const Region& r : {Region::box(4, 4, 2), Region::box(2, 2, 6)}) {
    enumerate(r, Family::slab, [&](const Tiling& t) {
      const GoodPair k = canonical_pair(Axis::Z);
      const Code before = canonical_encode(transform_tiling(t, k).tiling);
      for (const FlipMove& m : slab_flip_moves(t)) {
        const Tiling after = transform_tiling(m.result, k).tiling;
        const Code after_code = canonical_encode(after);
        if (after_code == before) continue;
        const Tiling original =
            transform_tiling(t, k).tiling;  // rebuild for move search
        bool one_flip = false;
        for (const FlipMove& dm : domino_flip_moves(original))
          one_flip = one_flip || canonical_encode(dm.result) == after_code;
        CHECK(one_flip);
      }
      return true;
    });
  }
}

TEST_CASE("mixed reflection and rotation identities hold exhaustively") {
  for (const Region& box : {Region::box(2, 2, 2), Region::box(4, 4, 2)}) {
    const Symmetry rx = box_fix_reflection(box, Axis::X);
    const Symmetry ry = box_fix_reflection(box, Axis::Y);
    const Symmetry rz = box_fix_reflection(box, Axis::Z);
    const Symmetry rot = Symmetry::rotation_z().then(
        Symmetry::translation({box.bounds().extent(Axis::Y), 0, 0}));
    enumerate(box, Family::mixed, [&](const Tiling& t) {
      for (const GoodPair k : {canonical_pair(Axis::Z),
                               canonical_pair(Axis::Z).complement()}) {
        const std::int64_t tw = mixed_twist(t, k);
        CHECK(mixed_twist(rx.apply(t), k) == tw);
        CHECK(mixed_twist(ry.apply(t), k) == tw);
        CHECK(mixed_twist(rz.apply(t), k) == -tw);
      }
      CHECK(mixed_twist(rot.apply(t)) == -mixed_twist(t));
      return true;
    });
  }
}

TEST_CASE("mixed identities are non-vacuous on a twist-two example") {
  // Every mixed tiling of the exhaustive corpora above has twist zero, so
  // the sliced box exemplar supplies a case where negation actually bites.
  const Region box = Region::box(6, 6, 6);
  const Tiling t = slice_vertical_slabs(load_fixture_tiling(
      "exemplar_6x6x6.json"));
  REQUIRE(mixed_twist(t) == 2);
  CHECK(mixed_twist(box_fix_reflection(box, Axis::X).apply(t)) == 2);
  CHECK(mixed_twist(box_fix_reflection(box, Axis::Y).apply(t)) == 2);
  CHECK(mixed_twist(box_fix_reflection(box, Axis::Z).apply(t)) == -2);
  const Symmetry rot = Symmetry::rotation_z().then(
      Symmetry::translation({box.bounds().extent(Axis::Y), 0, 0}));
  CHECK(mixed_twist(rot.apply(t)) == -2);
}

TEST_CASE("slab twists transport through signed permutations with sign(q)") {
  const auto perms = Symmetry::all_signed_permutations();
  enumerate(Region::box(2, 2, 4), Family::slab, [&](const Tiling& t) {
    for (const Symmetry& q : perms) {
      const Tiling qt = q.apply(t);
      for (Axis a : kAxes)
        for (int parity : {0, 1}) {
          const GoodPair k{a, parity};
          CHECK(twist_for_pair(t, k) ==
                q.sign() * twist_for_pair(qt, q.apply(k)));
        }
    }
    return true;
  });
}

TEST_CASE("sign transport is non-vacuous on the twist-two exemplar") {
  const Tiling t = load_fixture_tiling("exemplar_6x6x6.json");
  const GoodPair k = canonical_pair(Axis::Z);
  REQUIRE(twist_for_pair(t, k) == 2);
  int negative_sign_cases = 0;
  for (const Symmetry& q : Symmetry::all_signed_permutations()) {
    CHECK(2 == q.sign() * twist_for_pair(q.apply(t), q.apply(k)));
    negative_sign_cases += q.sign() < 0;
  }
  CHECK(negative_sign_cases == 24);
}
