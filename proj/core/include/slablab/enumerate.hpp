// Enumeration and counting of tilings.
//
// enumerate() is deterministic: it recurses on the lexicographically smallest
// uncovered cell and tries placements in a fixed order (slabs before
// dominoes for the mixed family; axes ordered x < y < z).  Identical calls
// always produce the identical tiling sequence.
//
// count_tilings() runs a broken-profile dynamic program over a lexicographic
// sweep (axes internally permuted so the longest extent varies slowest).  It
// falls back to enumeration when the profile window exceeds 128 cells.
//
// naive_oracle() is an intentionally simple independent implementation used
// by tests as ground truth.  It shares no search code with enumerate(): it
// precomputes every placement in the region and recurses on the first
// uncovered cell by rescanning.  It refuses regions above the cell bound.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "slablab/tiling.hpp"

namespace slablab {

// Visits tilings until exhaustion or until the visitor returns false.
// Returns the number of tilings visited.
std::uint64_t enumerate(const Region& region, Family family,
                        const std::function<bool(const Tiling&)>& visit);

// Convenience: the first `limit` tilings in enumeration order.
std::vector<Tiling> enumerate_up_to(const Region& region, Family family,
                                    std::uint64_t limit);

// Exact number of tilings; throws std::overflow_error if it exceeds uint64.
std::uint64_t count_tilings(const Region& region, Family family);

// Ground-truth enumeration for tests; throws std::invalid_argument when the
// region exceeds `cell_bound`.
std::vector<Tiling> naive_oracle(const Region& region, Family family,
                                 std::size_t cell_bound = 64);

// The placements of a single piece of the family that cover `pivot` assuming
// every lexicographically smaller cell is covered (i.e. pieces anchored at
// the pivot), in the fixed placement order.  Shared helper for enumeration
// and flip reachability; exposed for tests.
std::vector<Piece> placements_at(const Region& region, Family family,
                                 const Cell& pivot);

}  // namespace slablab
