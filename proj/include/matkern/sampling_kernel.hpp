#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "matkern/kernel.hpp"

namespace matkern {

// ceil((e*k)^(d-1) * ln(3k)); natural log makes the failure bound
// (1 - (1/(ek))^(d-1))^T <= 1/(3k) valid.
std::int64_t default_rounds_partition(int k, int d);

// ceil(4^(d-1) * ln(3k) * prod g_i(k)).
std::int64_t default_rounds_coverable(int k,
                                      std::span<const std::int64_t> g_values);

enum class CoverableClass { simple_partition, graphic, cographic };

// Per-class coverability value: k, k(k+1)/2, and 5k-1 respectively.
std::int64_t g_value(CoverableClass cls, int k);

// T rounds; each round samples block indices of every simple partition
// matroid with probability 1/k, then greedily selects up to k elements of the
// intersection, independent in m0.
Kernel partition_kernel(const Matroid& m0, std::span<const MatroidPtr> parts,
                        const Weights& weights, int k, std::uint64_t seed,
                        std::optional<std::int64_t> rounds = {});

struct CoverableInput {
  MatroidPtr matroid;
  std::int64_t g;
};

// As partition_kernel, but samples parallel-class representatives with
// probability 1/g_i(k) and pools the spans of the chosen representatives.
Kernel coverable_kernel(const Matroid& m0,
                        std::span<const CoverableInput> coverables,
                        const Weights& weights, int k, std::uint64_t seed,
                        std::optional<std::int64_t> rounds = {});

}  // namespace matkern
