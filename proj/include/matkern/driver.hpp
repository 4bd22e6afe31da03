#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "matkern/instance.hpp"
#include "matkern/kernel.hpp"
#include "matkern/verify.hpp"

namespace matkern {

enum class Alg { partition, coverable, transversal, laminar, matching,
                 deterministic };

std::optional<Alg> parse_alg(const std::string& name);
std::string alg_name(Alg alg);

// Dispatches one kernelization run, checking that the instance's structured
// matroids fit the algorithm (partition matroids are converted for the
// transversal route; coverable/deterministic classify simple-partition,
// graphic and cographic matroids via their g values).
Kernel run_kernel(const Instance& instance, Alg alg, std::uint64_t seed,
                  std::optional<std::int64_t> rounds = {},
                  std::optional<int> k_override = {});

// Union of `repeat` independent kernels (error probability (1/3)^repeat).
Kernel run_kernel_repeated(const Instance& instance, Alg alg,
                           std::uint64_t seed, int repeat,
                           std::optional<std::int64_t> rounds = {},
                           std::optional<int> k_override = {});

// Adapter for estimate_success_rate.
Kernelizer make_kernelizer(Alg alg, std::optional<std::int64_t> rounds = {},
                           int repeat = 1);

}  // namespace matkern
