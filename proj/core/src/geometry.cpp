#include "slablab/geometry.hpp"

#include <stdexcept>

namespace slablab {

char axis_name(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    default: return 'z';
  }
}

Axis axis_from_name(char name) {
  switch (name) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
    default: throw std::invalid_argument(std::string("unknown axis name: ") + name);
  }
}

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," +
         std::to_string(c.z) + ")";
}

}  // namespace slablab
