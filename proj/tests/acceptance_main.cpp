// Acceptance harness: one line per criterion, exit code = number of failed
// criteria.  Every expected value is pinned in this file; time limits are
// enforced per criterion.  Failures print the observed value next to the
// expectation so a regression is diagnosable from the one line alone.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "slablab/codec.hpp"
#include "slablab/coloring.hpp"
#include "slablab/construct.hpp"
#include "slablab/enumerate.hpp"
#include "slablab/flipgraph.hpp"
#include "slablab/io.hpp"
#include "slablab/region.hpp"
#include "slablab/tiling.hpp"
#include "slablab/transform.hpp"
#include "slablab/twist.hpp"
#include "slablab/verify.hpp"

using namespace slablab;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

int failures = 0;

std::string fixture(const std::string& name) {
  return std::string(SLABLAB_FIXTURE_DIR) + "/" + name;
}

void run(int number, const char* title, double limit_s,
         const std::function<Result()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("unexpected exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool in_time = secs <= limit_s;
  const bool pass = r.pass && in_time;
  std::printf("[%s] criterion %2d %-34s %6.2fs/%.0fs  %s%s\n",
              pass ? "PASS" : "FAIL", number, title, secs, limit_s,
              r.detail.c_str(),
              in_time ? "" : "  [time limit exceeded]");
  std::fflush(stdout);
  failures += !pass;
}

bool check(Result& r, bool ok, const std::string& what) {
  if (!ok) {
    r.pass = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += what;
  }
  return ok;
}

// ---- criterion bodies -----------------------------------------------------

Result fixture_invariants() {
  Result r{true, ""};
  const Tiling pin = load_tiling(fixture("pinwheel_3x3x2.json"));
  check(r, twist(pin).to_string() == "-1",
        "pinwheel twist was " + twist(pin).to_string() + ", wanted -1");

  const Tiling ex = load_tiling(fixture("exemplar_6x6x6.json"));
  check(r, canonical_pair(Axis::Z).name() == "z/0 (red-green)",
        "z pair misnamed: " + canonical_pair(Axis::Z).name());
  check(r, canonical_pair(Axis::Y).name() == "y/0 (green-blue)",
        "y pair misnamed: " + canonical_pair(Axis::Y).name());
  check(r, canonical_pair(Axis::X).name() == "x/0 (green-yellow)",
        "x pair misnamed: " + canonical_pair(Axis::X).name());
  const std::int64_t tz = twist_for_pair(ex, canonical_pair(Axis::Z));
  const std::int64_t ty = twist_for_pair(ex, canonical_pair(Axis::Y));
  const std::int64_t tx = twist_for_pair(ex, canonical_pair(Axis::X));
  check(r, tz == 2, "exemplar z twist " + std::to_string(tz) + " != 2");
  check(r, ty == 0, "exemplar y twist " + std::to_string(ty) + " != 0");
  check(r, tx == 0, "exemplar x twist " + std::to_string(tx) + " != 0");
  check(r, triple_twist(ex) == TripleTwist{0, 0, 2},
        "exemplar TTw " + triple_twist(ex).to_string() + " != (0,0,2)");
  if (r.pass) r.detail = "pinwheel Tw=-1; exemplar TTw=(0,0,2)";
  return r;
}

Result rigidity() {
  Result r{true, ""};
  for (int N : {3, 4}) {
    const Tiling t = rigid_pattern(N, 1);
    const auto flips = slab_flip_moves(t);
    check(r, flips.empty(),
          "rigid(" + std::to_string(N) + ",1) has " +
              std::to_string(flips.size()) + " flips");
    const std::int64_t tw = twist_for_pair(t, canonical_pair(Axis::Z));
    const std::int64_t want = 2 * (N - 1) * (N - 2);
    check(r, tw == want,
          "rigid(" + std::to_string(N) + ",1) twist " + std::to_string(tw) +
              " != " + std::to_string(want));
  }
  if (r.pass) r.detail = "0 flips; twists +4, +12";
  return r;
}

Result oracle_equivalence() {
  Result r{true, ""};
  struct Entry {
    std::string name;
    Region region;
  };
  const std::vector<Entry> corpus = {
      {"2x2x2", Region::box(2, 2, 2)},
      {"2x2x4", Region::box(2, 2, 4)},
      {"2x2x6", Region::box(2, 2, 6)},
      {"3x3x2", Region::box(3, 3, 2)},
      {"4x4x2", Region::box(4, 4, 2)},
      {"4x4x4", Region::box(4, 4, 4)},
      {"L-disk", load_region(fixture("disk_l_x2.json"))},
      {"T-disk", load_region(fixture("disk_t_x2.json"))},
  };
  int cells_checked = 0;
  for (const Entry& e : corpus) {
    for (Family f : {Family::slab, Family::domino, Family::mixed}) {
      if (e.name == "4x4x4" && f == Family::domino) {
        // 5,051,532,105 tilings: the naive oracle cannot enumerate them
        // within the time limit, so this sub-case is reported as failed
        // honestly instead of being skipped silently.  The optimized count
        // matches the published value, which is the strongest evidence
        // available at desk scale.
        const std::uint64_t dp = count_tilings(e.region, f);
        check(r, false,
              "4x4x4/domino: naive oracle infeasible (" +
                  std::to_string(dp) +
                  " tilings; enumeration cannot finish in 60s; optimized "
                  "count equals the published 5051532105" +
                  std::string(dp == 5051532105ULL ? ")" : " MISMATCH)"));
        continue;
      }
      std::set<Code> fast;
      enumerate(e.region, f, [&](const Tiling& t) {
        fast.insert(canonical_encode(t));
        return true;
      });
      std::set<Code> slow;
      for (const Tiling& t : naive_oracle(e.region, f))
        slow.insert(canonical_encode(t));
      const std::uint64_t dp = count_tilings(e.region, f);
      const std::string tag = e.name + "/" + family_name(f);
      check(r, fast == slow, tag + ": enumerate disagrees with oracle");
      check(r, dp == fast.size(),
            tag + ": count " + std::to_string(dp) + " != " +
                std::to_string(fast.size()));
      ++cells_checked;
    }
  }
  r.detail = std::to_string(cells_checked) +
             " region/family cells match the oracle; " + r.detail;
  return r;
}

Result flip_invariance_ttw() {
  Result r{true, ""};
  std::uint64_t tilings = 0, flips = 0;
  for (const Region& box : {Region::box(4, 4, 2), Region::box(2, 2, 6)}) {
    enumerate(box, Family::slab, [&](const Tiling& t) {
      ++tilings;
      const TripleTwist ttw = triple_twist(t);
      for (const FlipMove& m : slab_flip_moves(t)) {
        ++flips;
        if (!(triple_twist(m.result) == ttw)) {
          check(r, false,
                "TTw changed across a flip: " + ttw.to_string() + " -> " +
                    triple_twist(m.result).to_string());
          return false;
        }
      }
      return true;
    });
  }
  if (r.pass)
    r.detail = "TTw constant over " + std::to_string(flips) + " flips on " +
               std::to_string(tilings) + " tilings";
  return r;
}

Result complement_identity() {
  Result r{true, ""};
  std::uint64_t tilings = 0;
  const GoodPair k = canonical_pair(Axis::Z);
  for (const Region& box :
       {Region::box(2, 2, 2), Region::box(2, 2, 4), Region::box(4, 4, 2)}) {
    enumerate(box, Family::mixed, [&](const Tiling& t) {
      ++tilings;
      if (mixed_twist(t, k) != -mixed_twist(t, k.complement())) {
        check(r, false, "complement identity failed");
        return false;
      }
      return true;
    });
  }
  if (r.pass)
    r.detail =
        "Tw_k == -Tw_kbar on " + std::to_string(tilings) + " mixed tilings";
  return r;
}

Result symmetry_identities() {
  Result r{true, ""};
  for (const char* id : {"mixed-symmetry", "slab-symmetry"}) {
    const VerificationOutcome out = verify_statement(id);
    check(r, out.status == VerifyStatus::confirmed,
          std::string(id) + " not confirmed: " + out.detail);
    if (r.pass) {
      if (!r.detail.empty()) r.detail += "; ";
      r.detail += out.detail;
    }
  }
  return r;
}

Result connectivity() {
  Result r{true, ""};
  for (int n : {2, 3}) {
    const FlipGraphReport rep =
        components(Region::box(4, 4, n), Family::slab);
    check(r, rep.components.size() == 1 && !rep.truncated,
          "4x4x" + std::to_string(n) + " has " +
              std::to_string(rep.components.size()) + " components");
  }
  const VerificationOutcome disks = verify_statement("two-floor");
  check(r, disks.status == VerifyStatus::confirmed,
        std::string("two-floor: ") + verify_status_name(disks.status) + ", " +
            disks.detail);
  if (r.pass) r.detail = "4x4x2, 4x4x3 connected; " + disks.detail;
  return r;
}

Result solenoid_law() {
  Result r{true, ""};
  for (int u = -1; u <= 1; ++u)
    for (int v = -1; v <= 1; ++v) {
      const Tiling t = solenoid(1, {u, v});
      const TripleTwist want{0, 0, 2 * std::int64_t(u) * v * kSolenoidSign};
      if (!validate(t).ok() || !(triple_twist(t) == want)) {
        check(r, false,
              "solenoid(1,{" + std::to_string(u) + "," + std::to_string(v) +
                  "}) gave " + triple_twist(t).to_string());
      }
    }
  if (r.pass)
    r.detail = "9 flux pairs valid, TTw=(0,0,2uv) with sign " +
               std::to_string(kSolenoidSign);
  return r;
}

Result composed_realization() {
  Result r{true, ""};
  int done = 0;
  for (int tx = -2; tx <= 2; tx += 2)
    for (int ty = -2; ty <= 2; ty += 2)
      for (int tz = -2; tz <= 2; tz += 2) {
        const TripleTwist want{tx, ty, tz};
        const Tiling t = composed(1, want);
        if (!validate(t).ok() || !(triple_twist(t) == want)) {
          check(r, false, "composed(1," + want.to_string() + ") gave " +
                              triple_twist(t).to_string());
        }
        ++done;
      }
  if (r.pass)
    r.detail = std::to_string(done) + " target triples realized exactly";
  return r;
}

Result frozen_core() {
  Result r{true, ""};
  const std::uint64_t n =
      frozen_core_count(rigid_pattern(3, 1), {0, 0, 0}, {4, 4, 5});
  check(r, n == 1, "frozen core count " + std::to_string(n) + " != 1");
  if (r.pass) r.detail = "interior of rigid(3,1) re-tiles uniquely";
  return r;
}

Result twist_bound() {
  Result r{true, ""};
  std::int64_t max_abs = 0;
  std::uint64_t tilings = 0;
  enumerate(Region::box(4, 4, 4), Family::slab, [&](const Tiling& t) {
    ++tilings;
    const TripleTwist ttw = triple_twist(t);
    for (std::int64_t v : {ttw.x, ttw.y, ttw.z})
      max_abs = std::max(max_abs, v < 0 ? -v : v);
    return true;
  });
  check(r, tilings == 44913,
        "expected 44913 tilings, saw " + std::to_string(tilings));
  check(r, max_abs <= 16,
        "max |Tw| " + std::to_string(max_abs) + " exceeds 16");
  if (r.pass)
    r.detail = "max |Tw_k| = " + std::to_string(max_abs) +
               " <= 16 over 44913 tilings";
  return r;
}

Result parity_conjecture() {
  Result r{true, ""};
  VerifyOptions o;
  o.witness_dir = (std::filesystem::temp_directory_path() /
                   "slablab_acceptance_witnesses")
                      .string();
  std::filesystem::remove_all(o.witness_dir);

  // Every slab-tileable box of the corpus (3x3x2 has no slab tilings and
  // therefore carries no parity data).
  for (const Region& box :
       {Region::box(2, 2, 2), Region::box(2, 2, 4), Region::box(2, 2, 6),
        Region::box(4, 4, 2), Region::box(4, 4, 4)}) {
    const ParityScanResult res = parity_scan(box, o);
    const bool zeros = res.offsets[0] == 0 && res.offsets[1] == 0 &&
                       res.offsets[2] == 0;
    check(r, res.consistent && zeros && res.scanned > 0,
          "box parity scan reported a nonzero or inconsistent offset");
  }

  const Region ring = load_region(fixture("odd_ring.json"));
  const ParityScanResult res = parity_scan(ring, o);
  check(r, res.consistent && res.offsets[2] == 1 && res.scanned == 2,
        "odd ring scan: offset " + std::to_string(res.offsets[2]) +
            ", scanned " + std::to_string(res.scanned));

  // Refutations must land on disk: demonstrate with a deliberately broken
  // twist so the witness machinery is exercised end to end.
  const VerificationOutcome broken = verify_flip_invariance(
      [](const Tiling& t) {
        std::int64_t verticals = 0;
        for (const Piece& p : t.pieces()) verticals += p.axis == Axis::Z;
        return Quarters{verticals};
      },
      o);
  bool witnesses_ok = broken.status == VerifyStatus::refuted &&
                      broken.witnesses.size() == 2;
  for (const std::string& w : broken.witnesses)
    witnesses_ok = witnesses_ok && std::filesystem::exists(w) &&
                   validate(load_tiling(w)).ok();
  check(r, witnesses_ok, "refutation did not leave replayable witnesses");
  std::filesystem::remove_all(o.witness_dir);

  if (r.pass)
    r.detail = "box offsets (0,0,0); odd ring z-offset 1; witness files "
               "written and replayable on a forced refutation";
  return r;
}

}  // namespace

int main() {
  std::printf("acceptance: slab/domino tiling invariants\n");
  run(1, "fixture invariants", 1, fixture_invariants);
  run(2, "rigid patterns", 1, rigidity);
  run(3, "enumeration oracle equivalence", 60, oracle_equivalence);
  run(4, "triple twist flip invariance", 60, flip_invariance_ttw);
  run(5, "complement identity", 60, complement_identity);
  run(6, "symmetry identities", 120, symmetry_identities);
  run(7, "flip connectivity", 300, connectivity);
  run(8, "solenoid twist law", 540, solenoid_law);
  run(9, "composed cube realization", 600, composed_realization);
  run(10, "frozen core", 60, frozen_core);
  run(11, "twist bound", 300, twist_bound);
  run(12, "parity scan and witnesses", 300, parity_conjecture);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
