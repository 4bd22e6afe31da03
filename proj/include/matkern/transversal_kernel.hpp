#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matkern/kernel.hpp"

namespace matkern {

// The lifted ground set of the transversal-to-partition reduction: tuple t
// is (phi0[t], one incident edge per structured bipartite graph), where the
// edge is recorded by its right endpoint.
struct LiftedGroundSet {
  std::vector<int> phi0;
  // phi_right[i][t] = right vertex of the chosen edge of tuple t in graph i.
  std::vector<std::vector<int>> phi_right;

  std::int64_t size() const { return static_cast<std::int64_t>(phi0.size()); }
};

// Parallel-copy lift of a matroid: a tuple set is independent iff the phi0
// images are distinct and independent in the inner matroid.
class LiftedMatroid : public Matroid {
 public:
  LiftedMatroid(MatroidPtr inner, std::vector<int> phi0);
  const MatroidPtr& inner() const { return inner_; }
  std::string class_name() const override { return "lifted"; }

 protected:
  bool indep_impl(std::span<const int> s) const override;

 private:
  MatroidPtr inner_;
  std::vector<int> phi0_;
};

struct TransversalReduction {
  LiftedGroundSet lift;
  MatroidPtr lifted_m0;
  std::vector<MatroidPtr> lifted_parts;  // simple partition matroids
  Weights lifted_weights;
};

inline constexpr std::int64_t kDefaultLiftCap = 10'000'000;

// Splits every element into one tuple per combination of incident edges.
// Throws budget_exceeded when the tuple count exceeds the cap and
// normalization_error when some element has degree 0 in some graph.
TransversalReduction build_reduction(MatroidPtr m0,
                                     std::span<const MatroidPtr> transversals,
                                     const Weights& weights,
                                     std::int64_t lift_cap = kDefaultLiftCap);

// Kernelizes the lifted instance with partition_kernel and projects back.
Kernel transversal_kernel(MatroidPtr m0,
                          std::span<const MatroidPtr> transversals,
                          const Weights& weights, int k, std::uint64_t seed,
                          std::optional<std::int64_t> rounds = {},
                          std::int64_t lift_cap = kDefaultLiftCap);

// A partition matroid as a bipartite graph: block j's elements all connect to
// the same cap(j) dedicated right vertices.
MatroidPtr partition_to_transversal(const PartitionMatroid& p);

}  // namespace matkern
