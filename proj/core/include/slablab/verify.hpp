// Machine checks of the named tiling statements at desk scale, plus the
// twist-parity scanner.  Every check is deterministic for fixed options;
// refutations always produce replayable witness tiling files.
//
// Statement ids (see statement_ids()):
//   flip-invariance      twist unchanged by domino flips
//   integrality          twist integer on cylinders along z
//   coloring-uniqueness  slab-type colorings = recolorings of phi
//   complement           mixed twist negates under pair complement
//   mixed-symmetry       mixed twist under box reflections / 90-degree turn
//   slab-symmetry        slab twist transports with sign(q)
//   two-floor            two-floor disk cylinders are flip connected
//   four-by-four-n       4x4xN slab tilings form one flip component
//   rigidity             the staircase patterns admit no flips
//   solenoid             solenoid triple twist law (0,0,2uv)
//   composed             composed cube realizes requested triples
//   frozen-core          interior retiling of the rigid pattern is unique
//   bound                |Tw| over all 4x4x4 slab tilings within N^4/16
//
// A statement is `confirmed` when every instance in its scope holds,
// `refuted` (with witnesses) when one fails, and `skipped` when the
// configured budget does not cover it.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slablab/region.hpp"
#include "slablab/tiling.hpp"
#include "slablab/twist.hpp"

namespace slablab {

enum class VerifyStatus : std::uint8_t { confirmed, refuted, skipped };

const char* verify_status_name(VerifyStatus s);

struct VerificationOutcome {
  std::string id;
  std::string scope;    // human summary of what was swept
  VerifyStatus status = VerifyStatus::confirmed;
  std::string detail;   // values observed, counts, reasons
  std::vector<std::string> witnesses;  // tiling files (refutations only)
};

struct VerifyOptions {
  // Cap on enumerated tilings / visited flip-graph nodes per statement.
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;              // disk sampling
  std::string witness_dir = "witnesses";
};

// All known statement ids, in canonical run order.
const std::vector<std::string>& statement_ids();

// Runs one statement; throws std::invalid_argument for unknown ids.
VerificationOutcome verify_statement(const std::string& id,
                                     const VerifyOptions& options = {});

// Runs every statement in order.
std::vector<VerificationOutcome> verify_all(const VerifyOptions& options = {});

// The flip-invariance check with an injectable twist implementation; the
// registry uses the library twist.  A deliberately corrupted `twist_fn`
// makes the harness demonstrate a refutation with witnesses.
VerificationOutcome verify_flip_invariance(
    const std::function<Quarters(const Tiling&)>& twist_fn,
    const VerifyOptions& options = {});

// Twist-parity scan.  For each axis `a` with the region a cylinder along a,
// scans the slab tilings (up to options.budget) and reports the common
// parity of Tw_{kappa_a}; axes that are not applicable report -1.  If two
// tilings disagree on some axis the scan stops, reports `consistent=false`
// and writes both tilings as witness files.
struct ParityScanResult {
  int offsets[3] = {-1, -1, -1};       // parity per axis, or -1
  bool consistent = true;
  bool partial = false;                // budget exhausted before exhaustion
  std::uint64_t scanned = 0;
  std::vector<std::string> witnesses;
};

ParityScanResult parity_scan(const Region& region,
                             const VerifyOptions& options = {});

std::string outcome_to_json_line(const VerificationOutcome& o);
std::string parity_result_to_json_line(const ParityScanResult& r);

}  // namespace slablab
