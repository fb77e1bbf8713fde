// Flip moves and flip-graph connectivity.
//
// A flip removes the pieces filling a small block and places the alternative
// filling of the same block:
//   - domino family: two parallel dominoes in a 2x2x1 block -> the
//     perpendicular pair (one alternative per occupied block);
//   - slab family: two parallel slabs stacked along their common normal fill
//     a 2x2x2 block, which admits three slab tilings -> two alternatives;
//   - mixed family: two stacked horizontal slabs in a 2x2x2 block <-> the
//     four vertical dominoes on the same block (the only move that stays in
//     the family).
// domino_flip_moves lives in twist.hpp next to the invariant it preserves.
//
// components() enumerates every tiling of the region (stopping at `budget`)
// and partitions them by flip reachability.  Each component records its size,
// its lexicographically smallest canonical code, whether it is rigid (a
// single tiling admitting no move), and the invariant value shared by its
// members; an invariant that fails to be constant inside a component raises
// std::logic_error since that would falsify flip invariance.  The report is
// deterministic and independent of `seed`, which only shuffles the internal
// processing order (tests exercise exactly that independence).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slablab/codec.hpp"
#include "slablab/tiling.hpp"

namespace slablab {

std::vector<FlipMove> slab_flip_moves(const Tiling& t);
std::vector<FlipMove> mixed_flip_moves(const Tiling& t);

// Dispatches on t.family().
std::vector<FlipMove> flip_moves(const Tiling& t);

// The invariant attached to flip components, rendered as text:
//   domino family          "Tw=..."   (quarter-integer twist, any region)
//   slab family, box       "TTw=(a,b,c)"
//   slab family, cylinder  "Tw[x|y|z]=k"
//   mixed family, z-cyl    "Tw=k"
//   otherwise              "-"
std::string invariant_string(const Tiling& t);

struct ComponentInfo {
  std::uint64_t size = 0;
  Code representative;     // lex-min canonical code in the component
  std::string invariant;   // shared invariant_string() of the members
  bool rigid = false;      // single tiling with no flip move
};

struct FlipGraphReport {
  std::vector<ComponentInfo> components;  // sorted by representative
  std::uint64_t tiling_count = 0;
  std::uint64_t budget = 0;
  // Enumeration stopped at `budget`: the report partitions only the first
  // `budget` tilings, with moves leading outside that set ignored.
  bool truncated = false;
};

FlipGraphReport components(const Region& region, Family family,
                           std::uint64_t budget = 10'000'000,
                           std::uint64_t seed = 0);

std::string report_to_json(const FlipGraphReport& report);

// Flip closure of one tiling, found by search from `t` alone (no global
// enumeration).  `codes` lists every member, sorted, when not truncated.
struct Component {
  std::uint64_t size = 0;
  Code representative;
  std::string invariant;
  bool rigid = false;
  bool truncated = false;
  std::vector<Code> codes;
};

Component component_of(const Tiling& t, std::uint64_t budget = 10'000'000);

// Number of slab tilings of the union of the cells of the slabs of `t` whose
// closed unit cubes lie strictly inside the open box with real corners
// `corner_lo`, `corner_hi`.  Returns 1 when no slab lies strictly inside.
// Constant under flips confined to the open box, which makes it a local
// obstruction to connecting tilings that differ deep in the interior.
std::uint64_t frozen_core_count(const Tiling& t, const Cell& corner_lo,
                                const Cell& corner_hi);

// GraphViz rendering of the whole flip graph; refuses regions with more than
// 200 tilings (std::invalid_argument) to keep dumps readable.
std::string flip_graph_dot(const Region& region, Family family);

}  // namespace slablab
