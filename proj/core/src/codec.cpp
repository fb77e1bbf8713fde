#include "slablab/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace slablab {

namespace {

// Byte layout: bit 4 = kind, bits 3..2 = axis, bits 1..0 = cell index within
// the piece's lexicographically ordered cells.
std::uint8_t symbol(const Piece& p, int cell_index) {
  return std::uint8_t((int(p.kind) << 4) | (int(p.axis) << 2) | cell_index);
}

}  // namespace

Code canonical_encode(const Tiling& t) {
  Code code(t.region().size(), 0);
  std::vector<char> seen(t.region().size(), 0);
  for (const Piece& p : t.pieces()) {
    const auto cs = p.cells();
    for (int k = 0; k < p.cell_count(); ++k) {
      const int ci = t.region().index_of(cs[std::size_t(k)]);
      if (ci < 0 || seen[std::size_t(ci)]) {
        throw std::invalid_argument("canonical_encode: tiling is not valid");
      }
      seen[std::size_t(ci)] = 1;
      code[std::size_t(ci)] = symbol(p, k);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw std::invalid_argument("canonical_encode: region not fully covered");
  }
  return code;
}

Tiling canonical_decode(const Code& code, const Region& region,
                        std::optional<Family> family) {
  if (code.size() != region.size()) {
    throw std::invalid_argument("canonical_decode: code length mismatch");
  }
  std::vector<Piece> pieces;
  bool any_domino = false, any_slab = false;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const std::uint8_t sym = code[i];
    const auto kind = PieceKind((sym >> 4) & 1);
    const auto axis = Axis((sym >> 2) & 3);
    const int cell_index = sym & 3;
    if (int((sym >> 2) & 3) > 2 || cell_index >= (kind == PieceKind::domino ? 2 : 4)) {
      throw std::invalid_argument("canonical_decode: bad symbol");
    }
    if (cell_index != 0) continue;  // piece is recorded at its anchor cell
    Piece p{kind, axis, region.cells()[i]};
    (kind == PieceKind::domino ? any_domino : any_slab) = true;
    pieces.push_back(p);
  }
  Family f = family.value_or(any_domino && any_slab ? Family::mixed
                             : any_slab            ? Family::slab
                                                   : Family::domino);
  Tiling t = make_checked(region, f, std::move(pieces));
  // The non-anchor symbols must agree with the reconstruction.
  if (canonical_encode(t) != code) {
    throw std::invalid_argument("canonical_decode: inconsistent code");
  }
  return t;
}

std::string to_hex(const Code& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (std::uint8_t b : code) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Fingerprint fingerprint(const Code& code) {
  // Two independent 64-bit FNV-1a style lanes with different primes.
  std::uint64_t a = 0xcbf29ce484222325ull;
  std::uint64_t b = 0x9ae16a3b2f90404full;
  for (std::uint8_t byte : code) {
    a = (a ^ byte) * 0x100000001b3ull;
    b = (b ^ (byte + 0x9eull)) * 0xc2b2ae3d27d4eb4full;
    b ^= b >> 29;
  }
  a ^= a >> 33;
  a *= 0xff51afd7ed558ccdull;
  a ^= a >> 33;
  b *= 0xc4ceb9fe1a85ec53ull;
  b ^= b >> 32;
  return {a, b};
}

}  // namespace slablab
