#include "matkern/matching_kernel.hpp"

#include <cmath>
#include <string>

#include "matkern/errors.hpp"
#include "matkern/greedy.hpp"
#include "matkern/rng.hpp"

namespace matkern {

bool is_matching(std::span<const std::pair<int, int>> edges,
                 std::span<const int> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& [a1, a2] = edges[s[i]];
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto& [b1, b2] = edges[s[j]];
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
    }
  }
  return true;
}

std::int64_t default_rounds_matching(int k) {
  if (k < 2) {
    throw contract_error(
        "default_rounds_matching: k < 2 (use the k = 1 shortcut)");
  }
  const double e = std::exp(1.0);
  double value = 4.0 * e * static_cast<double>(k) * k * std::log(3.0 * k);
  if (!(value >= 0) || value > 4.6e18) {
    throw error("default_rounds_matching: round count overflows");
  }
  return static_cast<std::int64_t>(std::ceil(value));
}

Kernel matching_kernel(const MatchingInstance& instance, std::uint64_t seed,
                       std::optional<std::int64_t> rounds) {
  const int n = static_cast<int>(instance.edges.size());
  if (!instance.matroid || instance.matroid->ground_size() != n) {
    throw malformed_input("matching_kernel: matroid/edge count mismatch");
  }
  if (instance.weights.size() != static_cast<std::size_t>(n)) {
    throw malformed_input("matching_kernel: weight vector length mismatch");
  }
  if (instance.k < 1) throw malformed_input("matching_kernel: k must be >= 1");
  for (const auto& [u, v] : instance.edges) {
    if (u < 0 || u >= instance.vertex_count || v < 0 ||
        v >= instance.vertex_count) {
      throw malformed_input("matching_kernel: edge endpoint out of range");
    }
    if (u == v) {
      throw malformed_input("matching_kernel: self-loop edges are rejected");
    }
  }
  if (!instance.matroid->loopless()) {
    throw normalization_error("matching_kernel: edge matroid has loops");
  }

  const int k = instance.k;
  if (k == 1) {
    Kernel kernel;
    kernel.algorithm = "matching";
    kernel.seed = seed;
    std::optional<int> best;
    for (int e : instance.matroid->elements()) {
      if (!best || instance.weights[e] > instance.weights[*best]) best = e;
    }
    if (best) kernel.elements = {*best};
    return kernel;
  }

  const std::int64_t T = rounds ? *rounds : default_rounds_matching(k);
  if (T < 0) throw malformed_input("matching_kernel: negative round count");

  Kernel kernel;
  kernel.algorithm = "matching";
  kernel.seed = seed;
  kernel.rounds = T;

  std::vector<char> in_result(n, 0);
  std::vector<char> sampled(instance.vertex_count);
  ElementSet pool;
  for (std::int64_t t = 0; t < T; ++t) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(t)}));
    for (int v = 0; v < instance.vertex_count; ++v) {
      sampled[v] = rng.one_in(2ULL * static_cast<std::uint64_t>(k)) ? 1 : 0;
    }
    pool.clear();
    for (int e = 0; e < n; ++e) {
      if (sampled[instance.edges[e].first] &&
          sampled[instance.edges[e].second]) {
        pool.push_back(e);
      }
    }
    GreedyResult picked = greedy(*instance.matroid, pool, k, instance.weights);
    kernel.round_log.push_back(static_cast<int>(picked.selected.size()));
    for (int e : picked.selected) in_result[e] = 1;
  }
  for (int e = 0; e < n; ++e) {
    if (in_result[e]) kernel.elements.push_back(e);
  }
  if (static_cast<std::int64_t>(kernel.elements.size()) >
      static_cast<std::int64_t>(k) * T) {
    throw error("matching_kernel: internal size bound violated");
  }
  return kernel;
}

}  // namespace matkern
