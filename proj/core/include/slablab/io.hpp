// JSON interchange for regions and tilings.
//
// Region file, one of:
//   {"box": [L, M, N]}                  optional "origin": [x, y, z]
//   {"cells": [[x, y, z], ...]}
//   {"disk": [[x, y], ...], "height": N}
// Tiling file:
//   {"region": <region object>,
//    "family": "slab" | "domino" | "mixed",
//    "pieces": [{"kind": "slab", "anchor": [x,y,z], "normal": "z"},
//               {"kind": "domino", "anchor": [x,y,z], "axis": "y"}, ...]}
// Unknown keys are rejected everywhere.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slablab/region.hpp"
#include "slablab/tiling.hpp"

#include <json.hpp>

namespace slablab {

nlohmann::json region_to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

nlohmann::json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::json& j);

Region load_region(const std::string& path);
Tiling load_tiling(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

// Single-line JSON rendering, for one-tiling-per-line streams.
std::string to_json_line(const Tiling& t);

// Cell correspondence (e.g. TransformResult::cell_map) as an array of
// [[x,y,z],[x,y,z]] pairs.
nlohmann::json cell_map_to_json(const std::vector<std::pair<Cell, Cell>>& map);

}  // namespace slablab
