#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matkern/matroid.hpp"

namespace matkern {

struct GreedyResult {
  // In pick order: weights are non-increasing, ids break ties ascending.
  std::vector<int> selected;
  int pool_size = 0;
  std::uint64_t queries = 0;

  ElementSet selected_set() const { return to_canonical_set(selected); }
};

// Scans the pool in (weight desc, id asc) order and keeps every element that
// leaves the selection independent in m and of size at most k.
GreedyResult greedy(const Matroid& m, std::span<const int> pool, int k,
                    const Weights& weights);

}  // namespace matkern
