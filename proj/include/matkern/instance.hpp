#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matkern/matching_kernel.hpp"
#include "matkern/matroid.hpp"

namespace matkern {

enum class InstanceKind { intersection, matching };

struct GraphSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // edges[i] = endpoints of element i
};

// A problem instance: ground set [0, n) with weights and a parameter k.
// Intersection instances carry d matroids (index 0 is the arbitrary one);
// matching instances carry a graph over the elements plus one edge matroid.
struct Instance {
  std::string name;
  InstanceKind kind = InstanceKind::intersection;
  int n = 0;
  int k = 0;
  Weights weights;
  std::vector<MatroidPtr> matroids;
  std::optional<GraphSpec> graph;

  int d() const { return static_cast<int>(matroids.size()); }

  // Structural sanity; throws malformed_input on violations.
  void validate() const;

  // Independent in every matroid, and a matching for matching instances.
  bool feasible(std::span<const int> s) const;

  MatchingInstance matching_view() const;
};

}  // namespace matkern
