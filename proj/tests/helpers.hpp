#pragma once

#include <string>

#include "slablab/io.hpp"

inline std::string fixture_path(const std::string& name) {
  return std::string(SLABLAB_FIXTURE_DIR "/") + name;
}

inline slablab::Tiling load_fixture_tiling(const std::string& name) {
  return slablab::load_tiling(fixture_path(name));
}

inline slablab::Region load_fixture_region(const std::string& name) {
  return slablab::load_region(fixture_path(name));
}
