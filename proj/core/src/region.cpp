#include "slablab/region.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace slablab {

namespace {

// Guard for the dense index grid; regions here are desk scale.
constexpr std::int64_t kMaxGridVolume = 1 << 28;

}  // namespace

struct Region::Impl {
  std::vector<Cell> cells;  // sorted, unique
  Box bbox{};
  // Dense cell -> index map over the bounding box; empty for the empty region.
  std::vector<std::int32_t> grid;

  std::int64_t grid_offset(const Cell& c) const {
    const std::int64_t ny = bbox.extent(Axis::Y), nz = bbox.extent(Axis::Z);
    return (std::int64_t(c.x - bbox.lo.x) * ny + (c.y - bbox.lo.y)) * nz +
           (c.z - bbox.lo.z);
  }
};

Region::Region() : impl_(std::make_shared<const Impl>()) {}
Region::Region(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Region Region::from_cells(std::vector<Cell> cells) {
  auto impl = std::make_shared<Impl>();
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw std::invalid_argument("region: duplicate cell");
  }
  impl->cells = std::move(cells);
  if (!impl->cells.empty()) {
    Box b{impl->cells.front(), impl->cells.front()};
    for (const Cell& c : impl->cells) {
      for (Axis a : kAxes) {
        b.lo[a] = std::min(b.lo[a], c[a]);
        b.hi[a] = std::max(b.hi[a], c[a]);
      }
    }
    impl->bbox = b;
    if (b.volume() > kMaxGridVolume) {
      throw std::invalid_argument("region: bounding box too large");
    }
    impl->grid.assign(std::size_t(b.volume()), -1);
    for (std::size_t i = 0; i < impl->cells.size(); ++i) {
      impl->grid[std::size_t(impl->grid_offset(impl->cells[i]))] =
          std::int32_t(i);
    }
  }
  return Region(std::move(impl));
}

Region Region::box(int nx, int ny, int nz, Cell origin) {
  if (nx <= 0 || ny <= 0 || nz <= 0) {
    throw std::invalid_argument("region: box extents must be positive");
  }
  std::vector<Cell> cells;
  cells.reserve(std::size_t(nx) * ny * nz);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int z = 0; z < nz; ++z)
        cells.push_back({origin.x + x, origin.y + y, origin.z + z});
  return from_cells(std::move(cells));
}

Region Region::disk_prism(const std::vector<std::array<int, 2>>& disk, int height) {
  if (height <= 0) throw std::invalid_argument("region: height must be positive");
  std::vector<Cell> cells;
  cells.reserve(disk.size() * std::size_t(height));
  for (const auto& sq : disk)
    for (int z = 0; z < height; ++z) cells.push_back({sq[0], sq[1], z});
  return from_cells(std::move(cells));
}

const std::vector<Cell>& Region::cells() const { return impl_->cells; }
std::size_t Region::size() const { return impl_->cells.size(); }

int Region::index_of(const Cell& c) const {
  if (impl_->cells.empty() || !impl_->bbox.contains(c)) return -1;
  return impl_->grid[std::size_t(impl_->grid_offset(c))];
}

Box Region::bounds() const {
  if (empty()) throw std::logic_error("region: bounds() of empty region");
  return impl_->bbox;
}

bool Region::operator==(const Region& o) const {
  return impl_ == o.impl_ || impl_->cells == o.impl_->cells;
}

bool Region::is_box() const {
  return !empty() && std::int64_t(size()) == impl_->bbox.volume();
}

bool Region::is_cylinder_along(Axis a) const {
  if (empty()) return false;
  const auto [b, c] = transverse(a);

  // Group cells into columns along `a`; all columns must share one interval.
  std::unordered_map<std::uint64_t, std::pair<int, int>> col;  // (min,max)
  std::unordered_map<std::uint64_t, int> col_count;
  auto key = [&](const Cell& cc) {
    return (std::uint64_t(std::uint32_t(cc[b])) << 32) | std::uint32_t(cc[c]);
  };
  for (const Cell& cc : impl_->cells) {
    auto k = key(cc);
    auto it = col.find(k);
    if (it == col.end()) {
      col[k] = {cc[a], cc[a]};
      col_count[k] = 1;
    } else {
      it->second.first = std::min(it->second.first, cc[a]);
      it->second.second = std::max(it->second.second, cc[a]);
      ++col_count[k];
    }
  }
  const auto common = col.begin()->second;
  for (const auto& [k, mm] : col) {
    if (mm != common) return false;
    if (col_count[k] != mm.second - mm.first + 1) return false;  // gap in column
  }

  // Footprint must be a quadriculated disk: 4-connected and simply connected.
  std::vector<std::array<int, 2>> disk;
  disk.reserve(col.size());
  for (const auto& [k, mm] : col) {
    (void)mm;
    disk.push_back({int(std::int32_t(k >> 32)), int(std::int32_t(k & 0xffffffffu))});
  }
  std::sort(disk.begin(), disk.end());

  int lo0 = disk[0][0], hi0 = disk[0][0], lo1 = disk[0][1], hi1 = disk[0][1];
  for (auto& d : disk) {
    lo0 = std::min(lo0, d[0]); hi0 = std::max(hi0, d[0]);
    lo1 = std::min(lo1, d[1]); hi1 = std::max(hi1, d[1]);
  }
  const int w = hi0 - lo0 + 1, h = hi1 - lo1 + 1;
  auto at = [&](int p, int q) { return (p - lo0) * h + (q - lo1); };
  std::vector<char> in(std::size_t(w) * h, 0);
  for (auto& d : disk) in[std::size_t(at(d[0], d[1]))] = 1;

  // Flood fill the footprint.
  std::vector<char> seen(in.size(), 0);
  std::queue<std::array<int, 2>> q;
  q.push(disk[0]);
  seen[std::size_t(at(disk[0][0], disk[0][1]))] = 1;
  std::size_t reached = 0;
  const int dp[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (!q.empty()) {
    auto [p0, q0] = q.front();
    q.pop();
    ++reached;
    for (auto& d : dp) {
      int p1 = p0 + d[0], q1 = q0 + d[1];
      if (p1 < lo0 || p1 > hi0 || q1 < lo1 || q1 > hi1) continue;
      auto off = std::size_t(at(p1, q1));
      if (in[off] && !seen[off]) {
        seen[off] = 1;
        q.push({p1, q1});
      }
    }
  }
  if (reached != disk.size()) return false;

  // No holes: the complement, padded by one ring, must be one component.
  const int plo0 = lo0 - 1, phi0 = hi0 + 1, plo1 = lo1 - 1, phi1 = hi1 + 1;
  const int pw = phi0 - plo0 + 1, ph = phi1 - plo1 + 1;
  auto pat = [&](int p, int qq) { return (p - plo0) * ph + (qq - plo1); };
  std::vector<char> pseen(std::size_t(pw) * ph, 0);
  std::queue<std::array<int, 2>> pq;
  pq.push({plo0, plo1});
  pseen[std::size_t(pat(plo0, plo1))] = 1;
  std::size_t outside = 1;
  while (!pq.empty()) {
    auto [p0, q0] = pq.front();
    pq.pop();
    for (auto& d : dp) {
      int p1 = p0 + d[0], q1 = q0 + d[1];
      if (p1 < plo0 || p1 > phi0 || q1 < plo1 || q1 > phi1) continue;
      bool occupied = p1 >= lo0 && p1 <= hi0 && q1 >= lo1 && q1 <= hi1 &&
                      in[std::size_t(at(p1, q1))];
      auto off = std::size_t(pat(p1, q1));
      if (!occupied && !pseen[off]) {
        pseen[off] = 1;
        ++outside;
        pq.push({p1, q1});
      }
    }
  }
  const std::size_t complement = std::size_t(pw) * ph - disk.size();
  return outside == complement;
}

Region Region::open_interior_cells(const Cell& corner_lo,
                                   const Cell& corner_hi) const {
  std::vector<Cell> kept;
  for (const Cell& c : impl_->cells) {
    bool inside = true;
    for (Axis a : kAxes) {
      if (!(corner_lo[a] < c[a] && c[a] + 1 < corner_hi[a])) inside = false;
    }
    if (inside) kept.push_back(c);
  }
  return from_cells(std::move(kept));
}

}  // namespace slablab
