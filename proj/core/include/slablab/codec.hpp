// Canonical encoding of tilings.
//
// The code emits one byte per region cell, in the region's lexicographic cell
// order.  The byte records the covering piece's kind and axis together with
// which of the piece's cells (in the piece's own lexicographic cell order)
// this cell is; anchor - cell is recoverable from that index.  Codes are
// region-scoped: equal codes over the same region mean equal piece sets.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slablab/tiling.hpp"

namespace slablab {

using Code = std::vector<std::uint8_t>;

Code canonical_encode(const Tiling& t);

// Reconstructs the tiling from a code.  The family is inferred from the piece
// set when not supplied (all dominoes -> domino, all slabs -> slab, otherwise
// mixed); supply it to round-trip e.g. an all-slab mixed tiling.
Tiling canonical_decode(const Code& code, const Region& region,
                        std::optional<Family> family = std::nullopt);

std::string to_hex(const Code& code);

// 128-bit fingerprint for hashed visited sets; collisions are resolved by
// comparing full codes.
struct Fingerprint {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Code& code);

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const {
    return std::size_t(f.a ^ (f.b * 0x9e3779b97f4a7c15ull));
  }
};

}  // namespace slablab
