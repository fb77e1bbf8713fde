#include <doctest.h>

#include <string>

#include "slablab/coloring.hpp"
#include "slablab/region.hpp"

using namespace slablab;

TEST_CASE("the slab-type coloring assigns the documented colors") {
  CHECK(color_of({0, 0, 0}) == Color::green);
  CHECK(color_of({1, 1, 0}) == Color::red);
  // phi(1,0,0) = (0,1) and phi(0,1,0) = (1,0); yellow is (0,1) and blue is
  // (1,0), making the x pair green-yellow and the y pair green-blue.
  CHECK(color_of({1, 0, 0}) == Color::yellow);
  CHECK(color_of({0, 1, 0}) == Color::blue);
  CHECK(color_of({0, 0, 1}) == Color::red);
  CHECK(std::string(color_name(Color::green)) == "green");
}

TEST_CASE("color_of factors through phi") {
  for (const Cell& c : Region::box(3, 3, 3).cells()) {
    for (Axis a : kAxes) {
      Cell d = c;
      d[a] += 2;  // phi is 2-periodic along every axis
      CHECK(color_of(d) == color_of(c));
    }
    const Cell diag{c.x + 1, c.y + 1, c.z};  // phi(x+1,y+1,z) flips both bits
    CHECK((int(color_of(diag)) ^ int(color_of(c))) == 3);
  }
}

TEST_CASE("goodness follows the transverse-parity rule") {
  CHECK(is_good({0, 0, 0}, {Axis::Z, 0}));
  CHECK(!is_good({1, 0, 0}, {Axis::Z, 0}));
  CHECK(is_good({1, 0, 5}, {Axis::X, 1}));
  for (const Cell& c : Region::box(4, 4, 4).cells())
    for (Axis a : kAxes)
      for (int parity : {0, 1}) {
        const GoodPair k{a, parity};
        CHECK(is_good(c, k) != is_good(c, k.complement()));
      }
}

TEST_CASE("good pairs carry the canonical color names") {
  CHECK(canonical_pair(Axis::Z).name() == "z/0 (red-green)");
  CHECK(canonical_pair(Axis::X).name() == "x/0 (green-yellow)");
  CHECK(canonical_pair(Axis::Y).name() == "y/0 (green-blue)");
  CHECK(canonical_pair(Axis::Z).complement().name() == "z/1 (blue-yellow)");
  CHECK(canonical_pair(Axis::X).complement().name() == "x/1 (red-blue)");
  CHECK(canonical_pair(Axis::Y).complement().name() == "y/1 (red-yellow)");
  CHECK(canonical_pair(Axis::Z).complement().complement() ==
        canonical_pair(Axis::Z));
}

TEST_CASE("pair colors match goodness of concrete cells") {
  for (Axis a : kAxes)
    for (int parity : {0, 1}) {
      const GoodPair k{a, parity};
      const auto pair_colors = k.colors();
      for (const Cell& c : Region::box(2, 2, 2).cells()) {
        const bool in_pair = color_of(c) == pair_colors[0] ||
                             color_of(c) == pair_colors[1];
        CHECK(in_pair == is_good(c, k));
      }
    }
}

TEST_CASE("a single slab block admits all 24 colorings") {
  CHECK(all_slab_type_colorings(Region::box(2, 2, 1)).size() == 24);
}

TEST_CASE("slab-type colorings of small boxes are exactly the recolorings of phi") {
  for (int nx : {2, 3, 4})
    for (int ny : {2, 3, 4})
      for (int nz : {2, 3, 4}) {
        const Region r = Region::box(nx, ny, nz);
        const auto colorings = all_slab_type_colorings(r);
        CAPTURE(nx);
        CAPTURE(ny);
        CAPTURE(nz);
        CHECK(colorings.size() == 24);
        for (const auto& coloring : colorings)
          CHECK(matches_phi_up_to_permutation(r, coloring));
      }
}

TEST_CASE("coloring enumeration can stop early") {
  int seen = 0;
  const std::uint64_t n = enumerate_slab_type_colorings(
      Region::box(2, 2, 2), [&](const std::vector<Color>&) {
        return ++seen < 5;
      });
  CHECK(n == 5);
  CHECK(seen == 5);
}
