#include "slablab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace slablab {

namespace {

// Placement templates per family: kind + axis, in the canonical order.
std::vector<std::pair<PieceKind, Axis>> family_templates(Family family) {
  switch (family) {
    case Family::domino:
      return {{PieceKind::domino, Axis::X},
              {PieceKind::domino, Axis::Y},
              {PieceKind::domino, Axis::Z}};
    case Family::slab:
      return {{PieceKind::slab, Axis::X},
              {PieceKind::slab, Axis::Y},
              {PieceKind::slab, Axis::Z}};
    default:
      return {{PieceKind::slab, Axis::Z}, {PieceKind::domino, Axis::Z}};
  }
}

struct Enumerator {
  const Region& region;
  Family family;
  const std::function<bool(const Tiling&)>& visit;
  std::vector<std::pair<PieceKind, Axis>> templates;
  std::vector<char> covered;
  std::vector<Piece> stack;
  std::uint64_t emitted = 0;
  bool stopped = false;

  Enumerator(const Region& r, Family f,
             const std::function<bool(const Tiling&)>& v)
      : region(r), family(f), visit(v), templates(family_templates(f)) {
    covered.assign(region.size(), 0);
  }

  void rec(std::size_t from) {
    if (stopped) return;
    while (from < region.size() && covered[from]) ++from;
    if (from == region.size()) {
      ++emitted;
      if (!visit(Tiling(region, family, stack))) stopped = true;
      return;
    }
    const Cell pivot = region.cells()[from];
    std::array<int, 4> idx{};
    for (const auto& [kind, axis] : templates) {
      const Piece p{kind, axis, pivot};
      const auto cs = p.cells();
      bool ok = true;
      for (int k = 0; k < p.cell_count(); ++k) {
        const int ci = region.index_of(cs[std::size_t(k)]);
        if (ci < 0 || covered[std::size_t(ci)]) {
          ok = false;
          break;
        }
        idx[std::size_t(k)] = ci;
      }
      if (!ok) continue;
      for (int k = 0; k < p.cell_count(); ++k) covered[std::size_t(idx[std::size_t(k)])] = 1;
      stack.push_back(p);
      rec(from + 1);
      stack.pop_back();
      for (int k = 0; k < p.cell_count(); ++k) covered[std::size_t(idx[std::size_t(k)])] = 0;
      if (stopped) return;
    }
  }
};

}  // namespace

std::vector<Piece> placements_at(const Region& region, Family family,
                                 const Cell& pivot) {
  std::vector<Piece> out;
  for (const auto& [kind, axis] : family_templates(family)) {
    const Piece p{kind, axis, pivot};
    const auto cs = p.cells();
    bool ok = true;
    for (int k = 0; k < p.cell_count(); ++k) {
      if (!region.contains(cs[std::size_t(k)])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

std::uint64_t enumerate(const Region& region, Family family,
                        const std::function<bool(const Tiling&)>& visit) {
  Enumerator e(region, family, visit);
  e.rec(0);
  return e.emitted;
}

std::vector<Tiling> enumerate_up_to(const Region& region, Family family,
                                    std::uint64_t limit) {
  std::vector<Tiling> out;
  enumerate(region, family, [&](const Tiling& t) {
    out.push_back(t);
    return out.size() < limit;
  });
  return out;
}

namespace {

// Broken-profile DP.  Cells are swept in lexicographic order after permuting
// axes so the longest extent is the major (slowest) coordinate, which keeps
// the profile window at roughly one cross-section slice.
struct Mask128 {
  std::uint64_t lo = 0, hi = 0;
  friend bool operator==(const Mask128&, const Mask128&) = default;
  bool test(int i) const {
    return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
  }
  void set(int i) {
    if (i < 64) lo |= 1ull << i;
    else hi |= 1ull << (i - 64);
  }
  Mask128 shifted_down() const {
    return {(lo >> 1) | (hi << 63), hi >> 1};
  }
};

struct Mask128Hash {
  std::size_t operator()(const Mask128& m) const {
    std::uint64_t h = m.lo * 0x9e3779b97f4a7c15ull;
    h ^= (m.hi + 0xc2b2ae3d27d4eb4full) + (h << 6) + (h >> 2);
    return std::size_t(h);
  }
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = 0;
  if (__builtin_add_overflow(a, b, &s)) {
    throw std::overflow_error("count_tilings: count exceeds uint64");
  }
  return s;
}

std::uint64_t count_by_enumeration(const Region& region, Family family) {
  std::uint64_t n = 0;
  enumerate(region, family, [&](const Tiling&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace

std::uint64_t count_tilings(const Region& region, Family family) {
  if (region.empty()) return 1;
  if (region.size() % 2 != 0) return 0;

  // Axis permutation: longest extent first.
  const Box bb = region.bounds();
  std::array<Axis, 3> order = {Axis::X, Axis::Y, Axis::Z};
  std::stable_sort(order.begin(), order.end(), [&](Axis a, Axis b) {
    return bb.extent(a) > bb.extent(b);
  });
  std::vector<Cell> cells = region.cells();
  auto permuted = [&](const Cell& c) {
    return Cell{c[order[0]], c[order[1]], c[order[2]]};
  };
  std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
    return permuted(a) < permuted(b);
  });
  std::unordered_map<Cell, int, CellHash> index;
  index.reserve(cells.size() * 2);
  for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = int(i);

  // Precompute placements anchored at each swept cell as relative index
  // offsets, and the profile window width.
  struct Placement {
    std::array<int, 4> offsets;  // index deltas from the anchor, ascending
    int n = 0;
  };
  std::vector<std::vector<Placement>> at(cells.size());
  int window = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& [kind, axis] : family_templates(family)) {
      const Piece p{kind, axis, cells[i]};
      const auto cs = p.cells();
      Placement pl;
      pl.n = p.cell_count();
      bool ok = true;
      for (int k = 0; k < pl.n; ++k) {
        auto it = index.find(cs[std::size_t(k)]);
        if (it == index.end()) {
          ok = false;
          break;
        }
        const int delta = it->second - int(i);
        if (delta < 0) { ok = false; break; }  // cannot happen: anchor is lex-min
        pl.offsets[std::size_t(k)] = delta;
        window = std::max(window, delta + 1);
      }
      if (ok) {
        std::sort(pl.offsets.begin(), pl.offsets.begin() + pl.n);
        at[i].push_back(pl);
      }
    }
  }
  if (window > 128) return count_by_enumeration(region, family);

  using Layer = std::unordered_map<Mask128, std::uint64_t, Mask128Hash>;
  Layer cur;
  cur.emplace(Mask128{}, 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Layer next;
    next.reserve(cur.size() * 2);
    for (const auto& [mask, ways] : cur) {
      if (mask.test(0)) {
        auto [it, inserted] = next.try_emplace(mask.shifted_down(), ways);
        if (!inserted) it->second = checked_add(it->second, ways);
        continue;
      }
      for (const auto& pl : at[i]) {
        Mask128 m = mask;
        bool ok = true;
        for (int k = 0; k < pl.n; ++k) {
          const int off = pl.offsets[std::size_t(k)];
          if (off > 0 && m.test(off)) {
            ok = false;
            break;
          }
          m.set(off);
        }
        if (!ok) continue;
        auto [it, inserted] = next.try_emplace(m.shifted_down(), ways);
        if (!inserted) it->second = checked_add(it->second, ways);
      }
    }
    cur = std::move(next);
    if (cur.empty()) return 0;
  }
  auto it = cur.find(Mask128{});
  return it == cur.end() ? 0 : it->second;
}

std::vector<Tiling> naive_oracle(const Region& region, Family family,
                                 std::size_t cell_bound) {
  if (region.size() > cell_bound) {
    throw std::invalid_argument("naive_oracle: region exceeds the cell bound");
  }
  // Every placement of every allowed piece inside the region.
  std::vector<Piece> placements;
  for (const Cell& c : region.cells()) {
    for (Axis a : kAxes) {
      for (PieceKind kind : {PieceKind::domino, PieceKind::slab}) {
        const Piece p{kind, a, c};
        if (!allowed_in_family(p, family)) continue;
        const auto cs = p.cells();
        bool inside = true;
        for (int k = 0; k < p.cell_count(); ++k) {
          if (!region.contains(cs[std::size_t(k)])) inside = false;
        }
        if (inside) placements.push_back(p);
      }
    }
  }
  std::vector<std::vector<int>> covering(region.size());
  for (std::size_t pi = 0; pi < placements.size(); ++pi) {
    const auto cs = placements[pi].cells();
    for (int k = 0; k < placements[pi].cell_count(); ++k) {
      covering[std::size_t(region.index_of(cs[std::size_t(k)]))].push_back(int(pi));
    }
  }

  std::vector<Tiling> out;
  std::vector<char> covered(region.size(), 0);
  std::vector<Piece> chosen;
  const std::function<void()> rec = [&] {
    std::size_t first = 0;
    while (first < covered.size() && covered[first]) ++first;
    if (first == covered.size()) {
      out.push_back(Tiling(region, family, chosen));
      return;
    }
    for (int pi : covering[first]) {
      const Piece& p = placements[std::size_t(pi)];
      const auto cs = p.cells();
      bool free = true;
      for (int k = 0; k < p.cell_count(); ++k) {
        if (covered[std::size_t(region.index_of(cs[std::size_t(k)]))]) free = false;
      }
      if (!free) continue;
      for (int k = 0; k < p.cell_count(); ++k) {
        covered[std::size_t(region.index_of(cs[std::size_t(k)]))] = 1;
      }
      chosen.push_back(p);
      rec();
      chosen.pop_back();
      for (int k = 0; k < p.cell_count(); ++k) {
        covered[std::size_t(region.index_of(cs[std::size_t(k)]))] = 0;
      }
    }
  };
  rec();
  return out;
}

}  // namespace slablab
