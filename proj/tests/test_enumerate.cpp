#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "slablab/codec.hpp"
#include "slablab/enumerate.hpp"
#include "slablab/tiling.hpp"

using namespace slablab;

namespace {

std::set<Code> code_set(const std::vector<Tiling>& ts) {
  std::set<Code> out;
  for (const Tiling& t : ts) out.insert(canonical_encode(t));
  return out;
}

std::set<Code> enumerated_codes(const Region& r, Family f) {
  std::set<Code> out;
  enumerate(r, f, [&](const Tiling& t) {
    out.insert(canonical_encode(t));
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("frozen tiling counts of the box corpus") {
  struct Row {
    int nx, ny, nz;
    Family family;
    std::uint64_t count;
  };
  const Row rows[] = {
      {2, 2, 2, Family::slab, 3},
      {2, 2, 2, Family::mixed, 2},
      {2, 2, 2, Family::domino, 9},
      {2, 2, 4, Family::slab, 11},
      {2, 2, 6, Family::slab, 43},
      {2, 2, 6, Family::domino, 1681},
      {2, 2, 6, Family::mixed, 13},
      {3, 3, 2, Family::domino, 229},
      {3, 3, 2, Family::slab, 0},
      {4, 4, 2, Family::slab, 165},
      {4, 4, 2, Family::mixed, 35},
      {4, 4, 2, Family::domino, 32000},
      {4, 4, 4, Family::slab, 44913},
      {4, 4, 4, Family::mixed, 2238},
  };
  for (const Row& row : rows) {
    CAPTURE(row.nx);
    CAPTURE(row.nz);
    CAPTURE(int(row.family));
    CHECK(count_tilings(Region::box(row.nx, row.ny, row.nz), row.family) ==
          row.count);
  }
}

TEST_CASE("large counts stay exact through the profile DP") {
  CHECK(count_tilings(Region::box(6, 6, 2), Family::slab) == 205879ULL);
  CHECK(count_tilings(Region::box(4, 4, 4), Family::domino) ==
        5051532105ULL);
  CHECK(count_tilings(Region::box(6, 6, 6), Family::slab) ==
        70099470938794461ULL);
}

TEST_CASE("the weighted-strip recurrence matches 2x2xN slab counts") {
  // f(n) = f(n-1) + 2 f(n-2), f(0) = f(1) = 1.
  std::uint64_t f0 = 1, f1 = 1;
  for (int n = 2; n <= 8; ++n) {
    const std::uint64_t fn = f1 + 2 * f0;
    f0 = f1;
    f1 = fn;
    CHECK(count_tilings(Region::box(2, 2, n), Family::slab) == fn);
  }
}

TEST_CASE("enumerate agrees with the naive oracle on the corpus") {
  std::vector<Region> corpus = {
      Region::box(2, 2, 2), Region::box(2, 2, 4), Region::box(2, 2, 6),
      Region::box(3, 3, 2), Region::box(4, 4, 2),
      load_fixture_region("disk_l_x2.json"),
      load_fixture_region("disk_t_x2.json"),
  };
  for (const Region& r : corpus)
    for (Family f : {Family::domino, Family::slab, Family::mixed}) {
      CAPTURE(r.size());
      CAPTURE(int(f));
      const auto oracle = code_set(naive_oracle(r, f));
      CHECK(enumerated_codes(r, f) == oracle);
      CHECK(count_tilings(r, f) == oracle.size());
    }
}

TEST_CASE("frozen counts of the irregular two-floor disks") {
  const Region l = load_fixture_region("disk_l_x2.json");
  CHECK(count_tilings(l, Family::slab) == 3);
  CHECK(count_tilings(l, Family::domino) == 21);
  CHECK(count_tilings(l, Family::mixed) == 2);
  const Region t = load_fixture_region("disk_t_x2.json");
  CHECK(count_tilings(t, Family::slab) == 3);
  CHECK(count_tilings(t, Family::domino) == 65);
  CHECK(count_tilings(t, Family::mixed) == 3);
}

TEST_CASE("the naive oracle refuses oversized regions") {
  CHECK_THROWS_AS(naive_oracle(Region::box(5, 5, 3), Family::domino),
                  std::invalid_argument);
  CHECK_NOTHROW(naive_oracle(Region::box(2, 2, 1), Family::domino, 4));
  CHECK_THROWS_AS(naive_oracle(Region::box(2, 2, 2), Family::domino, 4),
                  std::invalid_argument);
}

TEST_CASE("enumeration is deterministic and every emitted tiling validates") {
  const Region r = Region::box(2, 2, 4);
  std::vector<Code> first, second;
  enumerate(r, Family::slab, [&](const Tiling& t) {
    CHECK(validate(t).ok());
    first.push_back(canonical_encode(t));
    return true;
  });
  enumerate(r, Family::slab, [&](const Tiling& t) {
    second.push_back(canonical_encode(t));
    return true;
  });
  CHECK(first == second);
  CHECK(first.size() == 11);
}

TEST_CASE("enumerate_up_to returns the sequence prefix") {
  const Region r = Region::box(2, 2, 4);
  const auto all = enumerate_up_to(r, Family::slab, 1000);
  const auto three = enumerate_up_to(r, Family::slab, 3);
  REQUIRE(all.size() == 11);
  REQUIRE(three.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(canonical_encode(three[std::size_t(i)]) ==
          canonical_encode(all[std::size_t(i)]));
}

TEST_CASE("untileable regions yield empty streams, not errors") {
  CHECK(count_tilings(Region::box(1, 1, 1), Family::domino) == 0);
  CHECK(count_tilings(Region::box(3, 3, 2), Family::slab) == 0);
  CHECK(enumerate_up_to(Region::box(3, 3, 2), Family::slab, 10).empty());
}

TEST_CASE("placements_at orders slabs before dominoes in the mixed family") {
  const auto ps =
      placements_at(Region::box(2, 2, 2), Family::mixed, {0, 0, 0});
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == make_slab({0, 0, 0}, Axis::Z));
  CHECK(ps[1] == make_domino({0, 0, 0}, Axis::Z));
  CHECK(placements_at(Region::box(2, 2, 2), Family::slab, {0, 0, 0}).size() ==
        3);
  CHECK(placements_at(Region::box(2, 2, 2), Family::domino, {0, 0, 0})
            .size() == 3);
}
