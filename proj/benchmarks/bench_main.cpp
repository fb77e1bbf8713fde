#include <benchmark/benchmark.h>

#include "slablab/construct.hpp"
#include "slablab/enumerate.hpp"
#include "slablab/flipgraph.hpp"
#include "slablab/transform.hpp"
#include "slablab/twist.hpp"

using namespace slablab;

static void bm_count_slab_4x4x4(benchmark::State& state) {
  const Region box = Region::box(4, 4, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_tilings(box, Family::slab));
}
BENCHMARK(bm_count_slab_4x4x4);

static void bm_count_domino_4x4x2(benchmark::State& state) {
  const Region box = Region::box(4, 4, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_tilings(box, Family::domino));
}
BENCHMARK(bm_count_domino_4x4x2);

static void bm_enumerate_slab_2x2x4(benchmark::State& state) {
  const Region box = Region::box(2, 2, 4);
  for (auto _ : state) {
    std::uint64_t n = enumerate(box, Family::slab,
                                [](const Tiling&) { return true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(bm_enumerate_slab_2x2x4);

static void bm_twist_domino_4x4x2(benchmark::State& state) {
  const Tiling t = enumerate_up_to(Region::box(4, 4, 2), Family::domino, 1)[0];
  for (auto _ : state) benchmark::DoNotOptimize(twist(t).quarters);
}
BENCHMARK(bm_twist_domino_4x4x2);

static void bm_triple_twist_rigid_n3(benchmark::State& state) {
  const Tiling t = rigid_pattern(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(triple_twist(t).z);
}
BENCHMARK(bm_triple_twist_rigid_n3);

static void bm_components_slab_2x2x4(benchmark::State& state) {
  const Region box = Region::box(2, 2, 4);
  for (auto _ : state) {
    FlipGraphReport r = components(box, Family::slab);
    benchmark::DoNotOptimize(r.components.size());
  }
}
BENCHMARK(bm_components_slab_2x2x4);

static void bm_solenoid_n1(benchmark::State& state) {
  for (auto _ : state) {
    Tiling t = solenoid(1, {1, 1});
    benchmark::DoNotOptimize(t.pieces().size());
  }
}
BENCHMARK(bm_solenoid_n1);

BENCHMARK_MAIN();
