#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "slablab/codec.hpp"
#include "slablab/enumerate.hpp"
#include "slablab/symmetry.hpp"
#include "slablab/twist.hpp"

using namespace slablab;

namespace {

Symmetry box_fix_reflection(const Region& box, Axis a) {
  Cell shift{0, 0, 0};
  shift[a] = box.bounds().extent(a);
  return Symmetry::reflection(a).then(Symmetry::translation(shift));
}

}  // namespace

TEST_CASE("quarter values format exactly") {
  CHECK(Quarters{-4}.to_string() == "-1");
  CHECK(Quarters{2}.to_string() == "1/2");
  CHECK(Quarters{7}.to_string() == "7/4");
  CHECK(Quarters{0}.to_string() == "0");
  CHECK(Quarters{-4}.is_integer());
  CHECK(Quarters{-4}.integer_value() == -1);
  CHECK(!Quarters{2}.is_integer());
  CHECK_THROWS_AS(Quarters{2}.integer_value(), std::logic_error);
  CHECK(Quarters{6}.value() == doctest::Approx(1.5));
}

TEST_CASE("the effect function matches its calibration") {
  const Piece d0 = make_domino({0, 0, 0}, Axis::Y);
  auto e = [&](int x, int y, int z) {
    return effect(d0, make_domino({x, y, z}, Axis::Z));
  };
  CHECK(e(1, 0, 0) == -1);
  CHECK(e(1, 1, 0) == +1);
  // Unit translations of d1 flip one convention parameter each.
  CHECK(e(2, 0, 0) == +1);   // x-distance parity
  CHECK(e(-1, 0, 0) == +1);  // side swap (and parity)
  CHECK(e(1, 0, -1) == +1);  // floor half
  // Projections onto the x = 0 plane that stop overlapping kill the effect.
  CHECK(e(1, 2, 0) == 0);
  CHECK(e(1, 0, 1) == 0);
  CHECK(e(1, -2, 0) == 0);
}

TEST_CASE("the effect function rejects wrong orientations") {
  CHECK_THROWS_AS(effect(make_domino({0, 0, 0}, Axis::X),
                         make_domino({1, 0, 0}, Axis::Z)),
                  std::invalid_argument);
  CHECK_THROWS_AS(effect(make_domino({0, 0, 0}, Axis::Y),
                         make_domino({1, 0, 0}, Axis::Y)),
                  std::invalid_argument);
  CHECK_THROWS_AS(effect(make_slab({0, 0, 0}, Axis::Z),
                         make_domino({1, 0, 0}, Axis::Z)),
                  std::invalid_argument);
}

TEST_CASE("tilings without vertical dominoes have twist zero") {
  const Tiling t = make_checked(
      Region::box(2, 2, 2), Family::domino,
      {make_domino({0, 0, 0}, Axis::Y), make_domino({1, 0, 0}, Axis::Y),
       make_domino({0, 0, 1}, Axis::Y), make_domino({1, 0, 1}, Axis::Y)});
  CHECK(twist(t) == Quarters{0});
}

TEST_CASE("all nine domino tilings of the cube have twist zero") {
  int n = 0;
  enumerate(Region::box(2, 2, 2), Family::domino, [&](const Tiling& t) {
    ++n;
    CHECK(twist(t) == Quarters{0});
    return true;
  });
  CHECK(n == 9);
}

TEST_CASE("the pinwheel fixture has twist -1 and admits no flips") {
  const Tiling t = load_fixture_tiling("pinwheel_3x3x2.json");
  CHECK(twist(t) == Quarters{-4});
  CHECK(twist(t).integer_value() == -1);
  CHECK(domino_flip_moves(t).empty());
}

TEST_CASE("twist is integer on every enumerated cylinder tiling") {
  for (const Region& r : {Region::box(3, 3, 2), Region::box(2, 2, 4),
                          load_fixture_region("disk_l_x2.json"),
                          load_fixture_region("odd_ring.json")}) {
    enumerate(r, Family::domino, [&](const Tiling& t) {
      CHECK(twist(t).is_integer());
      return true;
    });
  }
}

TEST_CASE("two parallel dominoes in a 2x2x1 block admit exactly one flip") {
  const Tiling t = make_checked(
      Region::box(2, 2, 1), Family::domino,
      {make_domino({0, 0, 0}, Axis::Y), make_domino({1, 0, 0}, Axis::Y)});
  const auto moves = domino_flip_moves(t);
  REQUIRE(moves.size() == 1);
  auto placed = moves[0].placed;
  std::sort(placed.begin(), placed.end());
  CHECK(placed == std::vector<Piece>{make_domino({0, 0, 0}, Axis::X),
                                     make_domino({0, 1, 0}, Axis::X)});
  CHECK(validate(moves[0].result).ok());
}

TEST_CASE("four parallel dominoes in the cube admit four flips") {
  const Tiling t = make_checked(
      Region::box(2, 2, 2), Family::domino,
      {make_domino({0, 0, 0}, Axis::Y), make_domino({1, 0, 0}, Axis::Y),
       make_domino({0, 0, 1}, Axis::Y), make_domino({1, 0, 1}, Axis::Y)});
  CHECK(domino_flip_moves(t).size() == 4);
}

TEST_CASE("domino flips are involutive") {
  const Tiling start = enumerate_up_to(Region::box(3, 3, 2), Family::domino,
                                       1)[0];
  const Code original = canonical_encode(start);
  for (const FlipMove& m : domino_flip_moves(start)) {
    bool found_inverse = false;
    for (const FlipMove& back : domino_flip_moves(m.result))
      found_inverse =
          found_inverse || canonical_encode(back.result) == original;
    CHECK(found_inverse);
  }
}

TEST_CASE("twist is invariant under every domino flip on small boxes") {
  for (const Region& r :
       {Region::box(2, 2, 2), Region::box(2, 2, 4), Region::box(3, 3, 2),
        Region::box(2, 2, 6), Region::box(4, 4, 2)}) {
    enumerate(r, Family::domino, [&](const Tiling& t) {
      const Quarters tw = twist(t);
      for (const FlipMove& m : domino_flip_moves(t))
        CHECK(twist(m.result) == tw);
      return true;
    });
  }
}

TEST_CASE("twist transforms with sign under all 48 signed permutations") {
  const Tiling t = load_fixture_tiling("pinwheel_3x3x2.json");
  for (const Symmetry& q : Symmetry::all_signed_permutations()) {
    const Tiling qt = q.apply(t);
    CHECK(twist(qt).quarters == q.sign() * twist(t).quarters);
  }
}

TEST_CASE("twist is rotation invariant and reflection antisymmetric on 3x3x2") {
  const Region box = Region::box(3, 3, 2);
  const Symmetry rot =
      Symmetry::rotation_z().then(Symmetry::translation({3, 0, 0}));
  const Symmetry rx = box_fix_reflection(box, Axis::X);
  const Symmetry ry = box_fix_reflection(box, Axis::Y);
  const Symmetry rz = box_fix_reflection(box, Axis::Z);
  int nonzero = 0;
  enumerate(box, Family::domino, [&](const Tiling& t) {
    const std::int64_t tw = twist(t).quarters;
    nonzero += tw != 0;
    CHECK(twist(rot.apply(t)).quarters == tw);
    CHECK(twist(rx.apply(t)).quarters == -tw);
    CHECK(twist(ry.apply(t)).quarters == -tw);
    CHECK(twist(rz.apply(t)).quarters == -tw);
    return true;
  });
  CHECK(nonzero == 2);  // the two pinwheels; the check is not vacuous
}
