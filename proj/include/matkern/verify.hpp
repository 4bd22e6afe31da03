#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "matkern/instance.hpp"
#include "matkern/kernel.hpp"
#include "matkern/laminar_kernel.hpp"

namespace matkern {

// Enumeration limits; exceeding them raises budget_exceeded.
struct BruteForceBudget {
  int max_elements = 40;
  int max_k = 5;
};

struct VerificationReport {
  std::vector<std::pair<ElementSet, int>> single_exc_violations;  // (X, x)
  std::vector<ElementSet> reachability_failures;
  std::uint64_t opt_full = 0;
  std::uint64_t opt_kernel = 0;
  int trials = 0;
  int successes = 0;

  bool clean() const {
    return single_exc_violations.empty() && reachability_failures.empty() &&
           opt_kernel == opt_full;
  }
};

// Streams every feasible set of size <= cap (the empty set included) in
// id-lexicographic order; pruning relies on downward closure.
void enumerate_feasible(const Instance& instance, int cap,
                        const std::function<void(const ElementSet&)>& visit,
                        const BruteForceBudget& budget = {});

std::vector<ElementSet> feasible_sets(const Instance& instance, int cap,
                                      const BruteForceBudget& budget = {});

// Exact optimum over feasible subsets of the domain with |X| <= cap, by
// branch and bound with a remaining-weight bound.
std::uint64_t opt_value(const Instance& instance, std::span<const int> domain,
                        int cap, const BruteForceBudget& budget = {});

// Optimum plus the first optimal set in the deterministic search order.
std::pair<std::uint64_t, ElementSet> opt_solution(
    const Instance& instance, std::span<const int> domain, int cap,
    const BruteForceBudget& budget = {});

// For every feasible X with |X| <= cap and every x in X, looks for
// y in R \ (X - x) with w(y) >= w(x) and X - x + y feasible.
VerificationReport check_single_exc(const Instance& instance,
                                    std::span<const int> kernel_elements,
                                    int cap,
                                    const BruteForceBudget& budget = {});

struct ReachabilityResult {
  bool ok = false;
  std::vector<int> witness;  // y_1..y_t on success
  int failed_step = -1;      // 0-based step on failure
};

// Step-wise construction: at step i replaces x_i (id order) by the smallest
// valid y_i in R, keeping the mixed set feasible, all-distinct and
// weight-dominating.
ReachabilityResult check_reachability(const Instance& instance,
                                      std::span<const int> kernel_elements,
                                      std::span<const int> feasible_x);

using Kernelizer =
    std::function<Kernel(const Instance& instance, std::uint64_t seed)>;

struct SuccessRateReport {
  int trials = 0;
  int successes = 0;
  // True when every successful trial also preserved the optimal value.
  bool opt_preserved = true;
  std::uint64_t opt_full = 0;

  double fraction() const {
    return trials == 0 ? 0.0
                       : static_cast<double>(successes) / trials;
  }
};

// Runs the kernelizer with derived seeds; a trial succeeds iff
// check_reachability holds for every feasible set of size <= k.
SuccessRateReport estimate_success_rate(const Instance& instance,
                                        const Kernelizer& kernelizer,
                                        int trials, std::uint64_t seed,
                                        const BruteForceBudget& budget = {});

struct CoverabilityAudit {
  bool within_bound = true;
  int max_cover = 0;
  ElementSet worst_witness;
};

// For every independent X with |X| <= cap, the minimal covering family is one
// representative per parallel class inside span(X); reports the largest cover
// against the claimed g.
CoverabilityAudit check_coverable(const Matroid& m, int cap,
                                  std::int64_t claimed_g,
                                  const BruteForceBudget& budget = {});

// The two structural conditions for a disjoint family: an x-containing member
// meeting X only at x, and no tight set (|(X-x) ∩ A| = cap(A)) containing any
// member.
bool good_family_check(const LaminarFamily& family, const DisjointFamily& z,
                       std::span<const int> independent_x, int x);

}  // namespace matkern
