#include "slablab/coloring.hpp"

#include <algorithm>
#include <array>

namespace slablab {

const char* color_name(Color c) {
  switch (c) {
    case Color::green: return "green";
    case Color::yellow: return "yellow";
    case Color::blue: return "blue";
    default: return "red";
  }
}

Color color_of(const Cell& c) {
  const int p1 = (c.y + c.z) & 1;  // first phi coordinate
  const int p2 = (c.x + c.z) & 1;  // second phi coordinate
  return Color(2 * p1 + p2);
}

std::array<Color, 2> GoodPair::colors() const {
  std::array<Color, 2> out{};
  int n = 0;
  for (int idx = 0; idx < 4; ++idx) {
    const int p1 = idx >> 1, p2 = idx & 1;
    int key;
    switch (axis) {
      case Axis::Z: key = (p1 + p2) & 1; break;  // x+y parity
      case Axis::X: key = p1; break;             // y+z parity
      default: key = p2; break;                  // x+z parity
    }
    if (key == parity) out[std::size_t(n++)] = Color(idx);
  }
  return out;
}

std::string GoodPair::name() const {
  // Color pair spelled in the conventional order for each view.
  static const char* kPairNames[3][2] = {
      {"green-yellow", "red-blue"},   // x view
      {"green-blue", "red-yellow"},   // y view
      {"red-green", "blue-yellow"},   // z view
  };
  return std::string(1, axis_name(axis)) + "/" + std::to_string(parity) +
         " (" + kPairNames[int(axis)][parity] + ")";
}

bool is_good(const Cell& c, const GoodPair& pair) {
  const auto [b, cc] = transverse(pair.axis);
  return ((c[b] + c[cc]) & 1) == pair.parity;
}

namespace {

struct ColoringSearch {
  const Region& region;
  const std::function<bool(const std::vector<Color>&)>& visit;
  // All slab placements inside the region, as cell indices; for each cell
  // index, the placements whose lexicographically last cell is that index.
  std::vector<std::array<int, 4>> placements;
  std::vector<std::vector<int>> completing;
  std::vector<Color> assignment;
  std::uint64_t found = 0;
  bool stopped = false;

  explicit ColoringSearch(
      const Region& r,
      const std::function<bool(const std::vector<Color>&)>& v)
      : region(r), visit(v) {
    completing.resize(region.size());
    for (const Cell& c : region.cells()) {
      for (Axis normal : kAxes) {
        const auto [b, cc] = transverse(normal);
        std::array<Cell, 4> cs{c, c + unit(b), c + unit(cc),
                               c + unit(b) + unit(cc)};
        std::array<int, 4> idx{};
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
          idx[std::size_t(i)] = region.index_of(cs[std::size_t(i)]);
          if (idx[std::size_t(i)] < 0) ok = false;
        }
        if (!ok) continue;
        int last = *std::max_element(idx.begin(), idx.end());
        completing[std::size_t(last)].push_back(int(placements.size()));
        placements.push_back(idx);
      }
    }
    assignment.assign(region.size(), Color::green);
  }

  bool consistent_at(std::size_t i) const {
    for (int pi : completing[i]) {
      const auto& p = placements[std::size_t(pi)];
      unsigned mask = 0;
      for (int ci : p) mask |= 1u << int(assignment[std::size_t(ci)]);
      if (mask != 0xfu) return false;  // some color repeated
    }
    return true;
  }

  void rec(std::size_t i) {
    if (stopped) return;
    if (i == region.size()) {
      ++found;
      if (!visit(assignment)) stopped = true;
      return;
    }
    for (int color = 0; color < 4; ++color) {
      assignment[i] = Color(color);
      if (consistent_at(i)) rec(i + 1);
      if (stopped) return;
    }
  }
};

}  // namespace

std::uint64_t enumerate_slab_type_colorings(
    const Region& region,
    const std::function<bool(const std::vector<Color>&)>& visit) {
  ColoringSearch s(region, visit);
  s.rec(0);
  return s.found;
}

std::vector<std::vector<Color>> all_slab_type_colorings(const Region& region) {
  std::vector<std::vector<Color>> out;
  enumerate_slab_type_colorings(region, [&](const std::vector<Color>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool matches_phi_up_to_permutation(const Region& region,
                                   const std::vector<Color>& coloring) {
  // Build the color permutation from the first occurrences and check it.
  std::array<int, 4> to{-1, -1, -1, -1};
  std::array<bool, 4> used{};
  const auto& cells = region.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int from = int(color_of(cells[i]));
    const int got = int(coloring[i]);
    if (to[std::size_t(from)] == -1) {
      if (used[std::size_t(got)]) return false;
      to[std::size_t(from)] = got;
      used[std::size_t(got)] = true;
    } else if (to[std::size_t(from)] != got) {
      return false;
    }
  }
  return true;
}

}  // namespace slablab
