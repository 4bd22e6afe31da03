#include "matkern/driver.hpp"

#include <vector>

#include "matkern/deterministic_kernel.hpp"
#include "matkern/errors.hpp"
#include "matkern/laminar_kernel.hpp"
#include "matkern/matching_kernel.hpp"
#include "matkern/rng.hpp"
#include "matkern/sampling_kernel.hpp"
#include "matkern/transversal_kernel.hpp"

namespace matkern {

std::optional<Alg> parse_alg(const std::string& name) {
  if (name == "partition") return Alg::partition;
  if (name == "coverable") return Alg::coverable;
  if (name == "transversal") return Alg::transversal;
  if (name == "laminar") return Alg::laminar;
  if (name == "matching") return Alg::matching;
  if (name == "deterministic") return Alg::deterministic;
  return std::nullopt;
}

std::string alg_name(Alg alg) {
  switch (alg) {
    case Alg::partition: return "partition";
    case Alg::coverable: return "coverable";
    case Alg::transversal: return "transversal";
    case Alg::laminar: return "laminar";
    case Alg::matching: return "matching";
    case Alg::deterministic: return "deterministic";
  }
  return "?";
}

namespace {

// g(k) by concrete class; throws class_mismatch for uncoverable classes.
std::int64_t classify_g(const Matroid& m, int k) {
  if (const auto* p = dynamic_cast<const PartitionMatroid*>(&m)) {
    if (p->is_simple()) return g_value(CoverableClass::simple_partition, k);
    throw class_mismatch(
        "coverable: general partition matroids go through the transversal "
        "kernel");
  }
  if (dynamic_cast<const GraphicMatroid*>(&m)) {
    return g_value(CoverableClass::graphic, k);
  }
  if (dynamic_cast<const CographicMatroid*>(&m)) {
    return g_value(CoverableClass::cographic, k);
  }
  throw class_mismatch("coverable: matroid class '" + m.class_name() +
                       "' has no g(k); use the transversal or laminar "
                       "kernels");
}

void require_intersection(const Instance& instance, const char* alg) {
  if (instance.kind != InstanceKind::intersection) {
    throw class_mismatch(std::string(alg) +
                         ": needs an intersection instance");
  }
  if (instance.d() < 2) {
    throw class_mismatch(std::string(alg) + ": needs d >= 2 matroids");
  }
}

}  // namespace

Kernel run_kernel(const Instance& instance, Alg alg, std::uint64_t seed,
                  std::optional<std::int64_t> rounds,
                  std::optional<int> k_override) {
  const int k = k_override.value_or(instance.k);
  switch (alg) {
    case Alg::partition: {
      require_intersection(instance, "partition");
      std::vector<MatroidPtr> parts(instance.matroids.begin() + 1,
                                    instance.matroids.end());
      return partition_kernel(*instance.matroids[0], parts, instance.weights,
                              k, seed, rounds);
    }
    case Alg::coverable: {
      require_intersection(instance, "coverable");
      std::vector<CoverableInput> inputs;
      for (int i = 1; i < instance.d(); ++i) {
        inputs.push_back({instance.matroids[i],
                          classify_g(*instance.matroids[i], k)});
      }
      return coverable_kernel(*instance.matroids[0], inputs, instance.weights,
                              k, seed, rounds);
    }
    case Alg::transversal: {
      require_intersection(instance, "transversal");
      std::vector<MatroidPtr> structured;
      for (int i = 1; i < instance.d(); ++i) {
        const Matroid& m = *instance.matroids[i];
        if (dynamic_cast<const TransversalMatroid*>(&m)) {
          structured.push_back(instance.matroids[i]);
        } else if (const auto* p =
                       dynamic_cast<const PartitionMatroid*>(&m)) {
          structured.push_back(partition_to_transversal(*p));
        } else {
          throw class_mismatch(
              "transversal: structured matroids must be transversal or "
              "partition");
        }
      }
      return transversal_kernel(instance.matroids[0], structured,
                                instance.weights, k, seed, rounds);
    }
    case Alg::laminar: {
      require_intersection(instance, "laminar");
      std::vector<MatroidPtr> lams(instance.matroids.begin() + 1,
                                   instance.matroids.end());
      return laminar_kernel(*instance.matroids[0], lams, instance.weights, k,
                            seed, rounds);
    }
    case Alg::matching: {
      MatchingInstance mi = instance.matching_view();
      mi.k = k;
      Kernel kernel = matching_kernel(mi, seed, rounds);
      return kernel;
    }
    case Alg::deterministic: {
      require_intersection(instance, "deterministic");
      if (instance.d() != 2) {
        throw class_mismatch("deterministic: needs exactly two matroids");
      }
      Kernel kernel = deterministic_kernel(
          instance.matroids[0], instance.matroids[1],
          classify_g(*instance.matroids[1], k), instance.weights, k);
      kernel.seed = seed;  // recorded for provenance; the algorithm is
                           // seed-independent
      return kernel;
    }
  }
  throw error("run_kernel: unreachable");
}

Kernel run_kernel_repeated(const Instance& instance, Alg alg,
                           std::uint64_t seed, int repeat,
                           std::optional<std::int64_t> rounds,
                           std::optional<int> k_override) {
  if (repeat < 1) throw malformed_input("repeat must be >= 1");
  Kernel merged;
  for (int c = 0; c < repeat; ++c) {
    const std::uint64_t run_seed =
        repeat == 1 ? seed
                    : derive_seed(seed, {0x7e9ea7u,
                                         static_cast<std::uint64_t>(c)});
    Kernel kernel = run_kernel(instance, alg, run_seed, rounds, k_override);
    if (c == 0) {
      merged = std::move(kernel);
      merged.seed = seed;
    } else {
      merged.elements = set_union(merged.elements, kernel.elements);
      merged.round_log.insert(merged.round_log.end(),
                              kernel.round_log.begin(),
                              kernel.round_log.end());
    }
  }
  return merged;
}

Kernelizer make_kernelizer(Alg alg, std::optional<std::int64_t> rounds,
                           int repeat) {
  return [alg, rounds, repeat](const Instance& instance, std::uint64_t seed) {
    return run_kernel_repeated(instance, alg, seed, repeat, rounds);
  };
}

}  // namespace matkern
