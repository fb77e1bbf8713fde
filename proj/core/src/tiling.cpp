#include "slablab/tiling.hpp"

#include <algorithm>
#include <stdexcept>

namespace slablab {

const char* family_name(Family f) {
  switch (f) {
    case Family::domino: return "domino";
    case Family::slab: return "slab";
    default: return "mixed";
  }
}

Family family_from_name(const std::string& name) {
  if (name == "domino") return Family::domino;
  if (name == "slab") return Family::slab;
  if (name == "mixed") return Family::mixed;
  throw std::invalid_argument("unknown family: " + name);
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string s = violations.front().message;
  if (violations.size() > 1) {
    s += " (+" + std::to_string(violations.size() - 1) + " more)";
  }
  return s;
}

Tiling::Tiling(Region region, Family family, std::vector<Piece> pieces)
    : region_(std::move(region)), family_(family), pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end());
  owner_.assign(region_.size(), -1);
  for (std::size_t pi = 0; pi < pieces_.size(); ++pi) {
    const auto cs = pieces_[pi].cells();
    for (int k = 0; k < pieces_[pi].cell_count(); ++k) {
      const int ci = region_.index_of(cs[std::size_t(k)]);
      if (ci >= 0) owner_[std::size_t(ci)] = std::int32_t(pi);
    }
  }
}

int Tiling::piece_at(const Cell& c) const {
  const int ci = region_.index_of(c);
  return ci < 0 ? -1 : owner_[std::size_t(ci)];
}

bool allowed_in_family(const Piece& p, Family f) {
  switch (f) {
    case Family::domino: return p.kind == PieceKind::domino;
    case Family::slab: return p.kind == PieceKind::slab;
    default:
      return (p.kind == PieceKind::slab && p.axis == Axis::Z) ||
             (p.kind == PieceKind::domino && p.axis == Axis::Z);
  }
}

ValidationReport validate(const Tiling& t) {
  ValidationReport report;
  std::vector<int> cover(t.region().size(), 0);
  for (const Piece& p : t.pieces()) {
    if (!allowed_in_family(p, t.family())) {
      report.violations.push_back(
          {"piece not allowed in family " +
               std::string(family_name(t.family())) + ": " + to_string(p),
           p, std::nullopt});
    }
    const auto cs = p.cells();
    for (int k = 0; k < p.cell_count(); ++k) {
      const Cell& c = cs[std::size_t(k)];
      const int ci = t.region().index_of(c);
      if (ci < 0) {
        report.violations.push_back(
            {"piece cell outside region: " + to_string(p) + " at " +
                 to_string(c),
             p, c});
      } else {
        ++cover[std::size_t(ci)];
      }
    }
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i] == 0) {
      report.violations.push_back({"cell not covered: " +
                                       to_string(t.region().cells()[i]),
                                   std::nullopt, t.region().cells()[i]});
    } else if (cover[i] > 1) {
      report.violations.push_back({"cell covered " + std::to_string(cover[i]) +
                                       " times: " +
                                       to_string(t.region().cells()[i]),
                                   std::nullopt, t.region().cells()[i]});
    }
  }
  return report;
}

Tiling make_checked(Region region, Family family, std::vector<Piece> pieces) {
  Tiling t(std::move(region), family, std::move(pieces));
  const auto report = validate(t);
  if (!report.ok()) {
    throw std::invalid_argument("invalid tiling: " + report.summary());
  }
  return t;
}

Tiling slice_vertical_slabs(const Tiling& slab_tiling) {
  if (slab_tiling.family() != Family::slab) {
    throw std::invalid_argument("slice_vertical_slabs: slab tiling required");
  }
  std::vector<Piece> pieces;
  pieces.reserve(slab_tiling.pieces().size() * 2);
  for (const Piece& p : slab_tiling.pieces()) {
    if (p.axis == Axis::Z) {
      pieces.push_back(p);
      continue;
    }
    // A vertical slab spans z and z+1 over a 2x1 footprint; cut it into the
    // two unit columns.
    const Axis other = p.axis == Axis::X ? Axis::Y : Axis::X;
    pieces.push_back(make_domino(p.anchor, Axis::Z));
    pieces.push_back(make_domino(p.anchor + unit(other), Axis::Z));
  }
  return make_checked(slab_tiling.region(), Family::mixed, std::move(pieces));
}

}  // namespace slablab
