#include "matkern/greedy.hpp"

#include <algorithm>

#include "matkern/errors.hpp"

namespace matkern {

GreedyResult greedy(const Matroid& m, std::span<const int> pool, int k,
                    const Weights& weights) {
  if (k < 1) throw malformed_input("greedy: k must be >= 1");
  if (weights.size() != static_cast<std::size_t>(m.ground_size())) {
    throw malformed_input("greedy: weight vector length mismatch");
  }
  ElementSet order = to_canonical_set(pool);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });

  GreedyResult result;
  result.pool_size = static_cast<int>(order.size());
  ElementSet current;
  for (int f : order) {
    if (static_cast<int>(current.size()) == k) break;
    ElementSet probe = set_insert(current, f);
    ++result.queries;
    if (m.is_independent(probe)) {
      current = std::move(probe);
      result.selected.push_back(f);
    }
  }
  return result;
}

}  // namespace matkern
