#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "matkern/kernel.hpp"

namespace matkern {

// Matroid-constrained matching: element i is edge i of the graph; feasible
// sets are matchings independent in the matroid.
struct MatchingInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  MatroidPtr matroid;
  Weights weights;
  int k = 0;
};

// Endpoint-disjointness check; edge ids must be distinct.
bool is_matching(std::span<const std::pair<int, int>> edges,
                 std::span<const int> s);

// ceil(4e * k^2 * ln(3k)).
std::int64_t default_rounds_matching(int k);

// T rounds; each samples vertices with probability 1/(2k) and greedily picks
// up to k matroid-independent edges among those with both endpoints sampled.
Kernel matching_kernel(const MatchingInstance& instance, std::uint64_t seed,
                       std::optional<std::int64_t> rounds = {});

}  // namespace matkern
