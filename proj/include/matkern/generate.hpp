#pragma once

#include <cstdint>
#include <string>

#include "matkern/instance.hpp"

namespace matkern {

struct GenParams {
  int n = 20;
  int d = 2;
  int k = 2;
  std::uint64_t weight_min = 1;
  std::uint64_t weight_max = 50;
  int vertices = 0;        // graph-backed kinds; 0 = derive from n and k
  int right_vertices = 0;  // transversal; 0 = derive
  int depth = 2;           // laminar nesting depth (2 = blocks only)
  int colors = 0;          // matching; 0 = derive
};

// kind in {partition, coverable-graphic, coverable-cographic, transversal,
// laminar, matching} ("rainbow" is an alias of matching). Deterministic in
// (kind, params, seed); the arbitrary matroid M0 is drawn from uniform,
// graphic and general-partition classes.
Instance generate(const std::string& kind, const GenParams& params,
                  std::uint64_t seed);

}  // namespace matkern
