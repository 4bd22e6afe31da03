#pragma once

#include <cstdint>

#include "matkern/kernel.hpp"

namespace matkern {

// Two-matroid deterministic kernel: g(k)+1 sweeps of greedy selections plus
// one greedy per selected element over its span in the coverable matroid,
// removing the union of those spans from the working set after each sweep.
// Satisfies the single-exchange property with probability 1; the result has
// at most k^2 (g+1) elements.
Kernel deterministic_kernel(MatroidPtr m0, MatroidPtr m1, std::int64_t g,
                            const Weights& weights, int k);

}  // namespace matkern
