#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matkern/matroid.hpp"

namespace matkern {

// Output of a kernelization run, with provenance for reproduction.
struct Kernel {
  ElementSet elements;
  std::string algorithm;
  std::uint64_t seed = 0;
  // Number of sampling rounds T (0 for the k = 1 shortcut).
  std::int64_t rounds = 0;
  // Size of the union of the selections made in each round.
  std::vector<int> round_log;
};

// Max-weight element whose singleton is independent in every matroid
// (min id on ties); nullopt when every element is a loop somewhere.
std::optional<int> best_feasible_singleton(std::span<const MatroidPtr> matroids,
                                           const Weights& weights);

}  // namespace matkern
