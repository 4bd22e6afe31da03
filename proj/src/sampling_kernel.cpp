#include "matkern/sampling_kernel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "matkern/errors.hpp"
#include "matkern/greedy.hpp"
#include "matkern/rng.hpp"

namespace matkern {

namespace {

constexpr double kMaxRounds = 4.6e18;

std::int64_t checked_ceil(double value, const char* what) {
  if (!(value >= 0) || value > kMaxRounds) {
    throw error(std::string(what) +
                ": round count overflows; pass an explicit T");
  }
  return static_cast<std::int64_t>(std::ceil(value));
}

// k = 1 shortcut: the max-weight singleton independent everywhere.
Kernel shortcut_k1(const Matroid& m0,
                   std::span<const Matroid* const> structured,
                   const Weights& weights, std::uint64_t seed,
                   const char* tag) {
  Kernel kernel;
  kernel.algorithm = tag;
  kernel.seed = seed;
  std::optional<int> best;
  for (int e = 0; e < m0.ground_size(); ++e) {
    bool ok = set_contains(m0.elements(), e);
    for (const Matroid* m : structured) {
      if (!ok) break;
      ok = set_contains(m->elements(), e);
    }
    if (ok && (!best || weights[e] > weights[*best])) best = e;
  }
  if (best) kernel.elements = {*best};
  return kernel;
}

}  // namespace

std::optional<int> best_feasible_singleton(std::span<const MatroidPtr> matroids,
                                           const Weights& weights) {
  std::optional<int> best;
  for (const MatroidPtr& m : matroids) {
    if (!m) throw malformed_input("null matroid");
  }
  const int n = matroids.empty() ? 0 : matroids.front()->ground_size();
  for (int e = 0; e < n; ++e) {
    bool feasible = true;
    for (const MatroidPtr& m : matroids) {
      if (!set_contains(m->elements(), e)) {
        feasible = false;
        break;
      }
    }
    if (feasible && (!best || weights[e] > weights[*best])) best = e;
  }
  return best;
}

std::int64_t default_rounds_partition(int k, int d) {
  if (k < 2) {
    throw contract_error(
        "default_rounds_partition: k < 2 (use the k = 1 shortcut)");
  }
  if (d < 2) throw contract_error("default_rounds_partition: d must be >= 2");
  const double e = std::exp(1.0);
  double value = std::pow(e * k, d - 1) * std::log(3.0 * k);
  return checked_ceil(value, "default_rounds_partition");
}

std::int64_t default_rounds_coverable(int k,
                                      std::span<const std::int64_t> g_values) {
  if (k < 2) {
    throw contract_error(
        "default_rounds_coverable: k < 2 (use the k = 1 shortcut)");
  }
  if (g_values.empty()) {
    throw contract_error("default_rounds_coverable: d must be >= 2");
  }
  double value = std::log(3.0 * k);
  for (std::int64_t g : g_values) {
    if (g < k) {
      throw contract_error("default_rounds_coverable: g(k) = " +
                           std::to_string(g) + " violates g(k) >= k = " +
                           std::to_string(k));
    }
    value *= 4.0 * static_cast<double>(g);
  }
  return checked_ceil(value, "default_rounds_coverable");
}

std::int64_t g_value(CoverableClass cls, int k) {
  if (k < 1) throw contract_error("g_value: k must be >= 1");
  switch (cls) {
    case CoverableClass::simple_partition:
      return k;
    case CoverableClass::graphic:
      // A forest with k edges in one component exposes C(k+1, 2) vertex
      // pairs, hence the safe bound k(k+1)/2.
      return static_cast<std::int64_t>(k) * (k + 1) / 2;
    case CoverableClass::cographic:
      return 5LL * k - 1;
  }
  throw class_mismatch(
      "g_value: class is not g(k)-coverable; use the transversal or laminar "
      "kernels");
}

Kernel partition_kernel(const Matroid& m0, std::span<const MatroidPtr> parts,
                        const Weights& weights, int k, std::uint64_t seed,
                        std::optional<std::int64_t> rounds) {
  const int n = m0.ground_size();
  if (parts.empty()) {
    throw malformed_input("partition_kernel: needs at least one partition "
                          "matroid (d >= 2)");
  }
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw malformed_input("partition_kernel: weight vector length mismatch");
  }
  if (k < 1) throw malformed_input("partition_kernel: k must be >= 1");

  std::vector<const PartitionMatroid*> blocks_of;
  for (const MatroidPtr& p : parts) {
    const auto* pm = dynamic_cast<const PartitionMatroid*>(p.get());
    if (pm == nullptr || !pm->is_simple()) {
      throw class_mismatch(
          "partition_kernel: structured matroids must be simple partition "
          "matroids");
    }
    if (pm->ground_size() != n) {
      throw malformed_input("partition_kernel: ground size mismatch");
    }
    blocks_of.push_back(pm);
  }

  if (k == 1) {
    std::vector<const Matroid*> structured(blocks_of.begin(), blocks_of.end());
    return shortcut_k1(m0, structured, weights, seed, "partition");
  }

  const std::int64_t T =
      rounds ? *rounds
             : default_rounds_partition(k, static_cast<int>(parts.size()) + 1);
  if (T < 0) throw malformed_input("partition_kernel: negative round count");

  Kernel kernel;
  kernel.algorithm = "partition";
  kernel.seed = seed;
  kernel.rounds = T;

  std::vector<char> in_result(n, 0);
  std::vector<char> sampled;
  std::vector<char> in_pool(n);
  ElementSet pool;
  for (std::int64_t t = 0; t < T; ++t) {
    std::fill(in_pool.begin(), in_pool.end(), 1);
    for (std::size_t i = 0; i < blocks_of.size(); ++i) {
      const PartitionMatroid& pm = *blocks_of[i];
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(t), i}));
      sampled.assign(pm.block_count(), 0);
      for (int j = 0; j < pm.block_count(); ++j) {
        sampled[j] = rng.one_in(static_cast<std::uint64_t>(k)) ? 1 : 0;
      }
      for (int e = 0; e < n; ++e) {
        if (in_pool[e] && !sampled[pm.block_of(e)]) in_pool[e] = 0;
      }
    }
    pool.clear();
    for (int e = 0; e < n; ++e) {
      if (in_pool[e]) pool.push_back(e);
    }
    GreedyResult picked = greedy(m0, pool, k, weights);
    kernel.round_log.push_back(static_cast<int>(picked.selected.size()));
    for (int e : picked.selected) in_result[e] = 1;
  }
  for (int e = 0; e < n; ++e) {
    if (in_result[e]) kernel.elements.push_back(e);
  }
  if (static_cast<std::int64_t>(kernel.elements.size()) >
      static_cast<std::int64_t>(k) * T) {
    throw error("partition_kernel: internal size bound violated");
  }
  return kernel;
}

Kernel coverable_kernel(const Matroid& m0,
                        std::span<const CoverableInput> coverables,
                        const Weights& weights, int k, std::uint64_t seed,
                        std::optional<std::int64_t> rounds) {
  const int n = m0.ground_size();
  if (coverables.empty()) {
    throw malformed_input("coverable_kernel: needs at least one structured "
                          "matroid (d >= 2)");
  }
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw malformed_input("coverable_kernel: weight vector length mismatch");
  }
  if (k < 1) throw malformed_input("coverable_kernel: k must be >= 1");

  std::vector<std::int64_t> gs;
  for (const CoverableInput& in : coverables) {
    if (!in.matroid || in.matroid->ground_size() != n) {
      throw malformed_input("coverable_kernel: ground size mismatch");
    }
    if (!in.matroid->loopless()) {
      throw normalization_error(
          "coverable_kernel: structured matroid has loops");
    }
    if (in.g < k) {
      throw contract_error("coverable_kernel: g(k) = " + std::to_string(in.g) +
                           " violates g(k) >= k = " + std::to_string(k));
    }
    gs.push_back(in.g);
  }

  if (k == 1) {
    std::vector<const Matroid*> structured;
    for (const CoverableInput& in : coverables) {
      structured.push_back(in.matroid.get());
    }
    return shortcut_k1(m0, structured, weights, seed, "coverable");
  }

  const std::int64_t T = rounds ? *rounds : default_rounds_coverable(k, gs);
  if (T < 0) throw malformed_input("coverable_kernel: negative round count");

  // Precompute parallel classes once: spans of representatives partition the
  // (loop-free) ground set, so membership is a representative index lookup.
  std::vector<std::vector<int>> class_of(coverables.size(),
                                         std::vector<int>(n, -1));
  std::vector<int> class_count(coverables.size(), 0);
  for (std::size_t i = 0; i < coverables.size(); ++i) {
    const Matroid& mi = *coverables[i].matroid;
    ElementSet reps = mi.parallel_representatives();
    class_count[i] = static_cast<int>(reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j) {
      int rep[1] = {reps[j]};
      for (int e : mi.span(std::span<const int>(rep, 1))) {
        class_of[i][e] = static_cast<int>(j);
      }
    }
    for (int e : mi.elements()) {
      if (class_of[i][e] < 0) {
        throw error("coverable_kernel: parallel classes do not cover the "
                    "ground set");
      }
    }
  }

  Kernel kernel;
  kernel.algorithm = "coverable";
  kernel.seed = seed;
  kernel.rounds = T;

  std::vector<char> in_result(n, 0);
  std::vector<char> chosen;
  std::vector<char> in_pool(n);
  ElementSet pool;
  for (std::int64_t t = 0; t < T; ++t) {
    std::fill(in_pool.begin(), in_pool.end(), 1);
    for (std::size_t i = 0; i < coverables.size(); ++i) {
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(t), i}));
      chosen.assign(class_count[i], 0);
      for (int j = 0; j < class_count[i]; ++j) {
        chosen[j] =
            rng.one_in(static_cast<std::uint64_t>(coverables[i].g)) ? 1 : 0;
      }
      for (int e = 0; e < n; ++e) {
        if (!in_pool[e]) continue;
        int cls = class_of[i][e];
        if (cls < 0 || !chosen[cls]) in_pool[e] = 0;
      }
    }
    pool.clear();
    for (int e = 0; e < n; ++e) {
      if (in_pool[e]) pool.push_back(e);
    }
    GreedyResult picked = greedy(m0, pool, k, weights);
    kernel.round_log.push_back(static_cast<int>(picked.selected.size()));
    for (int e : picked.selected) in_result[e] = 1;
  }
  for (int e = 0; e < n; ++e) {
    if (in_result[e]) kernel.elements.push_back(e);
  }
  if (static_cast<std::int64_t>(kernel.elements.size()) >
      static_cast<std::int64_t>(k) * T) {
    throw error("coverable_kernel: internal size bound violated");
  }
  return kernel;
}

}  // namespace matkern
