#include "slablab/flipgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "slablab/enumerate.hpp"
#include "slablab/transform.hpp"
#include "slablab/twist.hpp"

namespace slablab {

namespace {

Tiling apply_move(const Tiling& t, const std::vector<Piece>& removed,
                  const std::vector<Piece>& placed) {
  std::vector<Piece> pieces = t.pieces();
  pieces.erase(std::remove_if(pieces.begin(), pieces.end(),
                              [&](const Piece& p) {
                                return std::find(removed.begin(),
                                                 removed.end(),
                                                 p) != removed.end();
                              }),
               pieces.end());
  pieces.insert(pieces.end(), placed.begin(), placed.end());
  return Tiling(t.region(), t.family(), std::move(pieces));
}

bool has_piece(const Tiling& t, const Piece& p) {
  const int i = t.piece_at(p.anchor);
  return i >= 0 && t.pieces()[std::size_t(i)] == p;
}

// Union-find with parent[max] = min, so every root is the smallest index of
// its class.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[std::size_t(a)] != a) {
      parent[std::size_t(a)] = parent[std::size_t(parent[std::size_t(a)])];
      a = parent[std::size_t(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::size_t(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

std::vector<FlipMove> slab_flip_moves(const Tiling& t) {
  if (t.family() != Family::slab) {
    throw std::invalid_argument("slab_flip_moves: expected a slab tiling");
  }
  std::vector<FlipMove> moves;
  for (const Piece& s : t.pieces()) {
    // Partner stacked one step along the common normal fills a 2x2x2 block;
    // anchors increase, so each block is found once, from the lower slab.
    const Piece other = make_slab(s.anchor + unit(s.axis), s.axis);
    if (!has_piece(t, other)) continue;
    for (Axis b : kAxes) {
      if (b == s.axis) continue;
      const std::vector<Piece> placed = {make_slab(s.anchor, b),
                                         make_slab(s.anchor + unit(b), b)};
      moves.push_back(
          FlipMove{{s, other}, placed, apply_move(t, {s, other}, placed)});
    }
  }
  return moves;
}

std::vector<FlipMove> mixed_flip_moves(const Tiling& t) {
  if (t.family() != Family::mixed) {
    throw std::invalid_argument("mixed_flip_moves: expected a mixed tiling");
  }
  std::vector<FlipMove> moves;
  for (const Piece& p : t.pieces()) {
    if (p.kind == PieceKind::slab) {
      // Two stacked horizontal slabs -> four vertical dominoes.
      if (p.axis != Axis::Z) continue;
      const Piece other = make_slab(p.anchor + unit(Axis::Z), Axis::Z);
      if (!has_piece(t, other)) continue;
      std::vector<Piece> placed;
      for (int dx = 0; dx < 2; ++dx)
        for (int dy = 0; dy < 2; ++dy)
          placed.push_back(make_domino(
              p.anchor + Cell{dx, dy, 0}, Axis::Z));
      moves.push_back(
          FlipMove{{p, other}, placed, apply_move(t, {p, other}, placed)});
    } else {
      // Four vertical dominoes on a 2x2 footprint -> two stacked slabs;
      // found once, from the domino with the smallest anchor.
      if (p.axis != Axis::Z) continue;
      const std::vector<Piece> removed = {
          p, make_domino(p.anchor + Cell{1, 0, 0}, Axis::Z),
          make_domino(p.anchor + Cell{0, 1, 0}, Axis::Z),
          make_domino(p.anchor + Cell{1, 1, 0}, Axis::Z)};
      bool all = true;
      for (std::size_t i = 1; i < removed.size(); ++i) {
        if (!has_piece(t, removed[i])) all = false;
      }
      if (!all) continue;
      const std::vector<Piece> placed = {
          make_slab(p.anchor, Axis::Z),
          make_slab(p.anchor + unit(Axis::Z), Axis::Z)};
      moves.push_back(
          FlipMove{removed, placed, apply_move(t, removed, placed)});
    }
  }
  return moves;
}

std::vector<FlipMove> flip_moves(const Tiling& t) {
  switch (t.family()) {
    case Family::domino:
      return domino_flip_moves(t);
    case Family::slab:
      return slab_flip_moves(t);
    case Family::mixed:
      return mixed_flip_moves(t);
  }
  throw std::logic_error("flip_moves: bad family");
}

std::string invariant_string(const Tiling& t) {
  switch (t.family()) {
    case Family::domino:
      return "Tw=" + twist(t).to_string();
    case Family::slab: {
      if (t.region().is_box()) return "TTw=" + triple_twist(t).to_string();
      for (Axis a : kAxes) {
        if (t.region().is_cylinder_along(a)) {
          return std::string("Tw[") + axis_name(a) + "]=" +
                 std::to_string(twist_for_pair(t, canonical_pair(a)));
        }
      }
      return "-";
    }
    case Family::mixed:
      if (t.region().is_cylinder_along(Axis::Z)) {
        return "Tw=" + std::to_string(mixed_twist(t));
      }
      return "-";
  }
  throw std::logic_error("invariant_string: bad family");
}

FlipGraphReport components(const Region& region, Family family,
                           std::uint64_t budget, std::uint64_t seed) {
  FlipGraphReport rep;
  rep.budget = budget;

  std::vector<Code> codes;
  std::unordered_map<Fingerprint, std::vector<int>, FingerprintHash> index;
  enumerate(region, family, [&](const Tiling& t) {
    if (std::uint64_t(codes.size()) == budget) {
      rep.truncated = true;
      return false;
    }
    Code c = canonical_encode(t);
    index[fingerprint(c)].push_back(int(codes.size()));
    codes.push_back(std::move(c));
    return true;
  });
  rep.tiling_count = codes.size();
  if (codes.empty()) return rep;

  auto id_of = [&](const Code& c) -> int {
    auto it = index.find(fingerprint(c));
    if (it == index.end()) return -1;
    for (int i : it->second) {
      if (codes[std::size_t(i)] == c) return i;
    }
    return -1;
  };

  // The seed only shuffles the processing order; the partition below is
  // order-independent, so reports for different seeds coincide.
  std::vector<int> order(codes.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  Dsu dsu(codes.size());
  std::vector<std::uint32_t> degree(codes.size(), 0);
  std::vector<std::string> inv(codes.size());
  for (int i : order) {
    const Tiling t = canonical_decode(codes[std::size_t(i)], region, family);
    inv[std::size_t(i)] = invariant_string(t);
    for (const FlipMove& m : flip_moves(t)) {
      ++degree[std::size_t(i)];
      const int j = id_of(canonical_encode(m.result));
      if (j < 0) {
        // Only possible when enumeration was cut short; otherwise a flip
        // reached a tiling the enumerator missed.
        if (!rep.truncated) {
          throw std::logic_error(
              "components: flip result missing from full enumeration");
        }
        continue;
      }
      dsu.unite(i, j);
    }
  }

  std::map<int, ComponentInfo> groups;  // keyed by root = min member index
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const int r = dsu.find(int(i));
    ComponentInfo& g = groups[r];
    if (g.size == 0) {
      g.representative = codes[i];
      g.invariant = inv[i];
    } else {
      if (codes[i] < g.representative) g.representative = codes[i];
      if (inv[i] != g.invariant) {
        throw std::logic_error(
            "components: invariant not constant on a flip component: " +
            g.invariant + " vs " + inv[i]);
      }
    }
    ++g.size;
  }
  for (auto& [root, g] : groups) {
    g.rigid = g.size == 1 && degree[std::size_t(root)] == 0;
    rep.components.push_back(std::move(g));
  }
  std::sort(rep.components.begin(), rep.components.end(),
            [](const ComponentInfo& a, const ComponentInfo& b) {
              return a.representative < b.representative;
            });
  return rep;
}

std::string report_to_json(const FlipGraphReport& report) {
  nlohmann::json j;
  j["tiling_count"] = report.tiling_count;
  j["budget"] = report.budget;
  j["truncated"] = report.truncated;
  nlohmann::json comps = nlohmann::json::array();
  for (const ComponentInfo& c : report.components) {
    comps.push_back({{"size", c.size},
                     {"representative", to_hex(c.representative)},
                     {"invariant", c.invariant},
                     {"rigid", c.rigid}});
  }
  j["components"] = std::move(comps);
  return j.dump(2);
}

Component component_of(const Tiling& t, std::uint64_t budget) {
  Component comp;
  const Region& region = t.region();
  const Family family = t.family();

  std::vector<Code> codes;
  std::unordered_map<Fingerprint, std::vector<int>, FingerprintHash> index;
  auto find_id = [&](const Code& c) -> int {
    auto it = index.find(fingerprint(c));
    if (it == index.end()) return -1;
    for (int i : it->second) {
      if (codes[std::size_t(i)] == c) return i;
    }
    return -1;
  };
  auto add = [&](Code c) {
    index[fingerprint(c)].push_back(int(codes.size()));
    codes.push_back(std::move(c));
  };

  comp.invariant = invariant_string(t);
  add(canonical_encode(t));

  for (std::size_t head = 0; head < codes.size() && !comp.truncated; ++head) {
    const Tiling cur = canonical_decode(codes[head], region, family);
    const auto moves = flip_moves(cur);
    if (head == 0) comp.rigid = moves.empty();
    for (const FlipMove& m : moves) {
      Code c = canonical_encode(m.result);
      if (find_id(c) >= 0) continue;
      if (std::uint64_t(codes.size()) == budget) {
        comp.truncated = true;
        break;
      }
      const std::string iv = invariant_string(m.result);
      if (iv != comp.invariant) {
        throw std::logic_error(
            "component_of: flip changed the invariant: " + comp.invariant +
            " -> " + iv);
      }
      add(std::move(c));
    }
  }

  comp.size = codes.size();
  comp.rigid = comp.rigid && comp.size == 1;
  std::sort(codes.begin(), codes.end());
  comp.representative = codes.front();
  comp.codes = std::move(codes);
  return comp;
}

std::uint64_t frozen_core_count(const Tiling& t, const Cell& corner_lo,
                                const Cell& corner_hi) {
  if (t.family() != Family::slab) {
    throw std::invalid_argument("frozen_core_count: expected a slab tiling");
  }
  std::vector<Cell> core;
  for (const Piece& p : t.pieces()) {
    const auto cs = p.cells();
    bool inside = true;
    for (int i = 0; i < p.cell_count(); ++i) {
      for (Axis a : kAxes) {
        if (!(corner_lo[a] < cs[std::size_t(i)][a] &&
              cs[std::size_t(i)][a] + 1 < corner_hi[a])) {
          inside = false;
        }
      }
    }
    if (!inside) continue;
    core.insert(core.end(), cs.begin(), cs.begin() + p.cell_count());
  }
  return count_tilings(Region::from_cells(std::move(core)), Family::slab);
}

std::string flip_graph_dot(const Region& region, Family family) {
  constexpr std::uint64_t kMaxNodes = 200;
  std::vector<Tiling> all = enumerate_up_to(region, family, kMaxNodes + 1);
  if (all.size() > kMaxNodes) {
    throw std::invalid_argument("flip_graph_dot: more than 200 tilings");
  }

  std::vector<Code> codes(all.size());
  std::vector<int> order(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) codes[i] = canonical_encode(all[i]);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return codes[std::size_t(a)] < codes[std::size_t(b)];
  });
  std::vector<int> node_of(all.size());
  for (std::size_t n = 0; n < order.size(); ++n) {
    node_of[std::size_t(order[n])] = int(n);
  }
  auto id_of = [&](const Code& c) -> int {
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (codes[i] == c) return node_of[i];
    }
    throw std::logic_error("flip_graph_dot: flip result missing");
  };

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const FlipMove& m : flip_moves(all[i])) {
      int a = node_of[i], b = id_of(canonical_encode(m.result));
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::ostringstream out;
  out << "graph flips {\n";
  for (std::size_t n = 0; n < order.size(); ++n) {
    out << "  t" << n << " [label=\"t" << n << ": "
        << invariant_string(all[std::size_t(order[n])]) << "\"];\n";
  }
  for (const auto& [a, b] : edges) {
    out << "  t" << a << " -- t" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace slablab
