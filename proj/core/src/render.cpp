#include "slablab/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace slablab {

namespace {

struct FloorView {
  const Tiling& t;
  Box b;
  int z;

  // Piece index covering (x, y) on this floor, or -1.
  int key(int x, int y) const {
    if (x < b.lo.x || x > b.hi.x || y < b.lo.y || y > b.hi.y) return -1;
    if (!t.region().contains({x, y, z})) return -1;
    return t.piece_at({x, y, z});
  }
  bool hwall(int x, int y) const {  // between (x,y-1) and (x,y)
    return key(x, y - 1) != key(x, y);
  }
  bool vwall(int x, int y) const {  // between (x-1,y) and (x,y)
    return key(x - 1, y) != key(x, y);
  }
  char fill(int x, int y) const {
    const int k = key(x, y);
    if (k < 0) return ' ';
    const Piece& p = t.pieces()[std::size_t(k)];
    const bool spans = (p.kind == PieceKind::slab && p.axis != Axis::Z) ||
                       (p.kind == PieceKind::domino && p.axis == Axis::Z);
    if (!spans) return '.';
    return z == p.anchor.z ? '#' : ' ';
  }
};

}  // namespace

std::string render_ascii(const Tiling& t, bool floor_labels) {
  const Box b = t.region().bounds();
  const int W = b.hi.x - b.lo.x + 1, H = b.hi.y - b.lo.y + 1;
  const int F = b.hi.z - b.lo.z + 1;
  const int bw = 3 * W + 1;             // block width per floor
  const int gap = 2;
  const int rows = 2 * H + 1;
  const int cols = F * bw + (F - 1) * gap;
  std::vector<std::string> grid(std::size_t(rows) + (floor_labels ? 1 : 0),
                                std::string(std::size_t(cols), ' '));
  const int top = floor_labels ? 1 : 0;
  for (int fi = 0; fi < F; ++fi) {
    const int z = b.lo.z + fi;
    const int ox = fi * (bw + gap);
    const FloorView fv{t, b, z};
    if (floor_labels) {
      const std::string label = "z=" + std::to_string(z);
      for (std::size_t i = 0; i < label.size(); ++i)
        grid[0][std::size_t(ox) + i] = label[i];
    }
    // walls; the grid row for cell y is top + 2*(hi.y - y) + 1
    for (int gy = 0; gy <= H; ++gy) {
      const int y = b.hi.y - gy + 1;  // wall between cell rows y-1 and y
      for (int gx = 0; gx < W; ++gx) {
        const int x = b.lo.x + gx;
        if (fv.hwall(x, y)) {
          grid[std::size_t(top + 2 * gy)][std::size_t(ox + 3 * gx + 1)] = '-';
          grid[std::size_t(top + 2 * gy)][std::size_t(ox + 3 * gx + 2)] = '-';
        }
      }
    }
    for (int gy = 0; gy < H; ++gy) {
      const int y = b.hi.y - gy;
      for (int gx = 0; gx <= W; ++gx) {
        const int x = b.lo.x + gx;
        if (fv.vwall(x, y))
          grid[std::size_t(top + 2 * gy + 1)][std::size_t(ox + 3 * gx)] = '|';
      }
      for (int gx = 0; gx < W; ++gx) {
        const char c = fv.fill(b.lo.x + gx, y);
        grid[std::size_t(top + 2 * gy + 1)][std::size_t(ox + 3 * gx + 1)] = c;
        grid[std::size_t(top + 2 * gy + 1)][std::size_t(ox + 3 * gx + 2)] = c;
      }
    }
    // corners where any incident wall exists
    for (int gy = 0; gy <= H; ++gy)
      for (int gx = 0; gx <= W; ++gx) {
        const int r = top + 2 * gy, c = ox + 3 * gx;
        const bool left = gx > 0 && grid[std::size_t(r)][std::size_t(c - 1)] == '-';
        const bool right = gx < W && grid[std::size_t(r)][std::size_t(c + 1)] == '-';
        const bool up = gy > 0 && grid[std::size_t(r - 1)][std::size_t(c)] == '|';
        const bool down = gy < H && grid[std::size_t(r + 1)][std::size_t(c)] == '|';
        if (left || right || up || down)
          grid[std::size_t(r)][std::size_t(c)] = '+';
      }
  }
  std::string out;
  for (std::string& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Tiling& t) {
  const Box b = t.region().bounds();
  const int W = b.hi.x - b.lo.x + 1, H = b.hi.y - b.lo.y + 1;
  const int F = b.hi.z - b.lo.z + 1;
  const int s = 20, pad = 8, gap = 16, label_h = 18;
  const int bw = W * s;
  const int width = F * bw + (F - 1) * gap + 2 * pad;
  const int height = H * s + 2 * pad + label_h;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  for (int fi = 0; fi < F; ++fi) {
    const int z = b.lo.z + fi;
    const int ox = pad + fi * (bw + gap);
    const FloorView fv{t, b, z};
    svg << "<g transform=\"translate(" << ox << "," << (pad + label_h)
        << ")\">\n";
    svg << "<text x=\"0\" y=\"-6\" font-family=\"monospace\" font-size=\"12\">z="
        << z << "</text>\n";
    for (int y = b.lo.y; y <= b.hi.y; ++y)
      for (int x = b.lo.x; x <= b.hi.x; ++x) {
        if (fv.key(x, y) < 0) continue;
        const char c = fv.fill(x, y);
        const char* color = c == '.' ? "#c8c8c8" : (c == '#' ? "#6e6e6e" : "#ffffff");
        svg << "<rect x=\"" << (x - b.lo.x) * s << "\" y=\""
            << (b.hi.y - y) * s << "\" width=\"" << s << "\" height=\"" << s
            << "\" fill=\"" << color << "\" stroke=\"none\"/>\n";
      }
    // piece and region boundaries
    for (int y = b.lo.y; y <= b.hi.y + 1; ++y)
      for (int x = b.lo.x; x <= b.hi.x; ++x)
        if (fv.hwall(x, y)) {
          const int px = (x - b.lo.x) * s, py = (b.hi.y - y + 1) * s;
          svg << "<line x1=\"" << px << "\" y1=\"" << py << "\" x2=\""
              << px + s << "\" y2=\"" << py
              << "\" stroke=\"#222\" stroke-width=\"2\"/>\n";
        }
    for (int y = b.lo.y; y <= b.hi.y; ++y)
      for (int x = b.lo.x; x <= b.hi.x + 1; ++x)
        if (fv.vwall(x, y)) {
          const int px = (x - b.lo.x) * s, py = (b.hi.y - y) * s;
          svg << "<line x1=\"" << px << "\" y1=\"" << py << "\" x2=\"" << px
              << "\" y2=\"" << py + s
              << "\" stroke=\"#222\" stroke-width=\"2\"/>\n";
        }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace slablab
