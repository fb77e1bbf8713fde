#include "slablab/io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

using nlohmann::json;

namespace slablab {

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& what) {
  if (!j.is_object()) throw std::invalid_argument(what + ": object expected");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw std::invalid_argument(what + ": unknown key \"" + it.key() + "\"");
    }
  }
}

Cell cell_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number_integer() ||
      !j[1].is_number_integer() || !j[2].is_number_integer()) {
    throw std::invalid_argument(what + ": [x,y,z] expected");
  }
  return Cell{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json cell_to_json(const Cell& c) { return json::array({c.x, c.y, c.z}); }

}  // namespace

json region_to_json(const Region& r) {
  json j;
  if (r.is_box()) {
    const Box b = r.bounds();
    j["box"] = json::array(
        {b.extent(Axis::X), b.extent(Axis::Y), b.extent(Axis::Z)});
    if (!(b.lo == Cell{0, 0, 0})) j["origin"] = cell_to_json(b.lo);
    return j;
  }
  json cells = json::array();
  for (const Cell& c : r.cells()) cells.push_back(cell_to_json(c));
  j["cells"] = std::move(cells);
  return j;
}

Region region_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("region: object expected");
  if (j.contains("box")) {
    reject_unknown_keys(j, {"box", "origin"}, "region");
    const auto& b = j["box"];
    if (!b.is_array() || b.size() != 3) {
      throw std::invalid_argument("region: \"box\" must be [L,M,N]");
    }
    Cell origin{0, 0, 0};
    if (j.contains("origin")) origin = cell_from_json(j["origin"], "region origin");
    return Region::box(b[0].get<int>(), b[1].get<int>(), b[2].get<int>(), origin);
  }
  if (j.contains("cells")) {
    reject_unknown_keys(j, {"cells"}, "region");
    std::vector<Cell> cells;
    for (const auto& c : j["cells"]) cells.push_back(cell_from_json(c, "region cell"));
    return Region::from_cells(std::move(cells));
  }
  if (j.contains("disk")) {
    reject_unknown_keys(j, {"disk", "height"}, "region");
    if (!j.contains("height")) throw std::invalid_argument("region: disk needs \"height\"");
    std::vector<std::array<int, 2>> disk;
    for (const auto& sq : j["disk"]) {
      if (!sq.is_array() || sq.size() != 2) {
        throw std::invalid_argument("region: disk square must be [x,y]");
      }
      disk.push_back({sq[0].get<int>(), sq[1].get<int>()});
    }
    return Region::disk_prism(disk, j["height"].get<int>());
  }
  throw std::invalid_argument("region: expected \"box\", \"cells\" or \"disk\"");
}

json tiling_to_json(const Tiling& t) {
  json pieces = json::array();
  for (const Piece& p : t.pieces()) {
    json pj;
    pj["kind"] = p.kind == PieceKind::slab ? "slab" : "domino";
    pj["anchor"] = cell_to_json(p.anchor);
    pj[p.kind == PieceKind::slab ? "normal" : "axis"] =
        std::string(1, axis_name(p.axis));
    pieces.push_back(std::move(pj));
  }
  json j;
  j["region"] = region_to_json(t.region());
  j["family"] = family_name(t.family());
  j["pieces"] = std::move(pieces);
  return j;
}

Tiling tiling_from_json(const json& j) {
  reject_unknown_keys(j, {"region", "family", "pieces"}, "tiling");
  if (!j.contains("region") || !j.contains("family") || !j.contains("pieces")) {
    throw std::invalid_argument("tiling: needs \"region\", \"family\", \"pieces\"");
  }
  Region region = region_from_json(j["region"]);
  Family family = family_from_name(j["family"].get<std::string>());
  std::vector<Piece> pieces;
  for (const auto& pj : j["pieces"]) {
    if (!pj.is_object() || !pj.contains("kind") || !pj.contains("anchor")) {
      throw std::invalid_argument("tiling piece: needs \"kind\" and \"anchor\"");
    }
    const std::string kind = pj["kind"].get<std::string>();
    const Cell anchor = cell_from_json(pj["anchor"], "piece anchor");
    if (kind == "slab") {
      reject_unknown_keys(pj, {"kind", "anchor", "normal"}, "slab piece");
      if (!pj.contains("normal")) throw std::invalid_argument("slab piece: needs \"normal\"");
      const std::string n = pj["normal"].get<std::string>();
      if (n.size() != 1) throw std::invalid_argument("slab piece: bad normal");
      pieces.push_back(make_slab(anchor, axis_from_name(n[0])));
    } else if (kind == "domino") {
      reject_unknown_keys(pj, {"kind", "anchor", "axis"}, "domino piece");
      if (!pj.contains("axis")) throw std::invalid_argument("domino piece: needs \"axis\"");
      const std::string a = pj["axis"].get<std::string>();
      if (a.size() != 1) throw std::invalid_argument("domino piece: bad axis");
      pieces.push_back(make_domino(anchor, axis_from_name(a[0])));
    } else {
      throw std::invalid_argument("tiling piece: unknown kind \"" + kind + "\"");
    }
  }
  return make_checked(std::move(region), family, std::move(pieces));
}

Region load_region(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open region file: " + path);
  json j;
  in >> j;
  return region_from_json(j);
}

Tiling load_tiling(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tiling file: " + path);
  json j;
  in >> j;
  return tiling_from_json(j);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

std::string to_json_line(const Tiling& t) { return tiling_to_json(t).dump(); }

json cell_map_to_json(const std::vector<std::pair<Cell, Cell>>& map) {
  json pairs = json::array();
  for (const auto& [from, to] : map)
    pairs.push_back(json::array({cell_to_json(from), cell_to_json(to)}));
  return pairs;
}

}  // namespace slablab
