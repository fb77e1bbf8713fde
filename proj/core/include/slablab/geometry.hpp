// Basic lattice geometry: axes and unit cubes.
//
// A cell is the unit cube [x,x+1] x [y,y+1] x [z,z+1], identified by its
// minimum corner (x,y,z).  Cells compare lexicographically by (x,y,z); all
// deterministic orders in this library derive from that comparison.
//
// Floor diagrams read the z axis as the vertical (stacking) direction: floor
// n is the slice z in [n,n+1].

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace slablab {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

char axis_name(Axis a);
Axis axis_from_name(char name);  // throws std::invalid_argument on bad input

// The two coordinates of the plane transverse to a view axis, in the fixed
// cyclic order: z -> (x,y), x -> (y,z), y -> (z,x).
constexpr std::array<Axis, 2> transverse(Axis a) {
  switch (a) {
    case Axis::X: return {Axis::Y, Axis::Z};
    case Axis::Y: return {Axis::Z, Axis::X};
    default: return {Axis::X, Axis::Y};
  }
}

struct Cell {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;

  constexpr int operator[](Axis a) const {
    return a == Axis::X ? x : (a == Axis::Y ? y : z);
  }
  int& operator[](Axis a) { return a == Axis::X ? x : (a == Axis::Y ? y : z); }

  constexpr Cell operator+(const Cell& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Cell operator-(const Cell& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

constexpr Cell unit(Axis a) {
  switch (a) {
    case Axis::X: return {1, 0, 0};
    case Axis::Y: return {0, 1, 0};
    default: return {0, 0, 1};
  }
}

std::string to_string(const Cell& c);

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t v : {std::uint64_t(std::uint32_t(c.x)),
                            std::uint64_t(std::uint32_t(c.y)),
                            std::uint64_t(std::uint32_t(c.z))}) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return std::size_t(h);
  }
};

// Inclusive integer bounding box of a set of cells.
struct Box {
  Cell lo;
  Cell hi;
  constexpr int extent(Axis a) const { return hi[a] - lo[a] + 1; }
  constexpr std::int64_t volume() const {
    return std::int64_t(extent(Axis::X)) * extent(Axis::Y) * extent(Axis::Z);
  }
  constexpr bool contains(const Cell& c) const {
    return lo.x <= c.x && c.x <= hi.x && lo.y <= c.y && c.y <= hi.y &&
           lo.z <= c.z && c.z <= hi.z;
  }
};

// True iff x+y+z is even ("black" cube of the checkerboard coloring).
constexpr bool black_cell(const Cell& c) { return ((c.x + c.y + c.z) & 1) == 0; }

}  // namespace slablab
