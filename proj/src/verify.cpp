#include "matkern/verify.hpp"

#include <algorithm>
#include <string>

#include "matkern/errors.hpp"
#include "matkern/rng.hpp"

namespace matkern {

namespace {

void check_budget(int n, int cap, const BruteForceBudget& budget,
                  const char* what) {
  if (n > budget.max_elements || cap > budget.max_k) {
    throw budget_exceeded(std::string(what) + ": instance with n = " +
                          std::to_string(n) + ", k = " + std::to_string(cap) +
                          " exceeds the brute-force budget (n <= " +
                          std::to_string(budget.max_elements) + ", k <= " +
                          std::to_string(budget.max_k) + ")");
  }
}

}  // namespace

void enumerate_feasible(const Instance& instance, int cap,
                        const std::function<void(const ElementSet&)>& visit,
                        const BruteForceBudget& budget) {
  check_budget(instance.n, cap, budget, "enumerate_feasible");
  ElementSet current;
  auto recurse = [&](auto&& self, int next) -> void {
    visit(current);
    if (static_cast<int>(current.size()) == cap) return;
    for (int e = next; e < instance.n; ++e) {
      current.push_back(e);
      if (instance.feasible(current)) self(self, e + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
}

std::vector<ElementSet> feasible_sets(const Instance& instance, int cap,
                                      const BruteForceBudget& budget) {
  std::vector<ElementSet> out;
  enumerate_feasible(
      instance, cap, [&](const ElementSet& s) { out.push_back(s); }, budget);
  return out;
}

std::pair<std::uint64_t, ElementSet> opt_solution(
    const Instance& instance, std::span<const int> domain, int cap,
    const BruteForceBudget& budget) {
  check_budget(instance.n, cap, budget, "opt_value");
  ElementSet sorted_domain = to_canonical_set(domain);
  // Search in weight-descending order so the remaining-weight bound is tight.
  std::vector<int> order(sorted_domain.begin(), sorted_domain.end());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (instance.weights[a] != instance.weights[b]) {
      return instance.weights[a] > instance.weights[b];
    }
    return a < b;
  });
  const int m = static_cast<int>(order.size());

  std::uint64_t best = 0;
  ElementSet best_set;
  ElementSet current;
  auto recurse = [&](auto&& self, int idx, std::uint64_t weight) -> void {
    if (weight > best) {
      best = weight;
      best_set = current;
    }
    if (static_cast<int>(current.size()) == cap) return;
    for (int i = idx; i < m; ++i) {
      // weight plus the `remaining` heaviest elements from position i on;
      // non-increasing in i, so pruning cuts the whole loop.
      const int remaining = cap - static_cast<int>(current.size());
      std::uint64_t bound = weight;
      for (int j = i; j < m && j < i + remaining; ++j) {
        bound += instance.weights[order[j]];
      }
      if (bound <= best) return;
      ElementSet candidate = set_insert(current, order[i]);
      if (instance.feasible(candidate)) {
        std::swap(current, candidate);
        self(self, i + 1, weight + instance.weights[order[i]]);
        std::swap(current, candidate);
      }
    }
  };
  recurse(recurse, 0, 0);
  return {best, best_set};
}

std::uint64_t opt_value(const Instance& instance, std::span<const int> domain,
                        int cap, const BruteForceBudget& budget) {
  return opt_solution(instance, domain, cap, budget).first;
}

VerificationReport check_single_exc(const Instance& instance,
                                    std::span<const int> kernel_elements,
                                    int cap, const BruteForceBudget& budget) {
  VerificationReport report;
  ElementSet kernel = to_canonical_set(kernel_elements);
  enumerate_feasible(
      instance, cap,
      [&](const ElementSet& x_set) {
        for (int x : x_set) {
          ElementSet without = set_erase(x_set, x);
          bool found = false;
          for (int y : kernel) {
            if (set_contains(without, y)) continue;
            if (instance.weights[y] < instance.weights[x]) continue;
            ElementSet swapped = set_insert(without, y);
            if (instance.feasible(swapped)) {
              found = true;
              break;
            }
          }
          if (!found) report.single_exc_violations.emplace_back(x_set, x);
        }
      },
      budget);
  return report;
}

ReachabilityResult check_reachability(const Instance& instance,
                                      std::span<const int> kernel_elements,
                                      std::span<const int> feasible_x) {
  ElementSet kernel = to_canonical_set(kernel_elements);
  ElementSet x_set = to_canonical_set(feasible_x);
  if (!instance.feasible(x_set)) {
    throw malformed_input("check_reachability: X is not feasible");
  }
  const int t = static_cast<int>(x_set.size());
  ReachabilityResult result;
  ElementSet current = x_set;  // {y_1..y_{i-1}, x_i..x_t}
  for (int i = 0; i < t; ++i) {
    const int x = x_set[i];
    ElementSet without = set_erase(current, x);
    bool stepped = false;
    for (int y : kernel) {
      if (instance.weights[y] < instance.weights[x]) continue;
      // "set of size t": y must be distinct from everything but x itself.
      if (set_contains(without, y)) continue;
      ElementSet swapped = set_insert(without, y);
      if (instance.feasible(swapped)) {
        result.witness.push_back(y);
        current = std::move(swapped);
        stepped = true;
        break;
      }
    }
    if (!stepped) {
      result.failed_step = i;
      return result;
    }
  }
  result.ok = true;
  return result;
}

SuccessRateReport estimate_success_rate(const Instance& instance,
                                        const Kernelizer& kernelizer,
                                        int trials, std::uint64_t seed,
                                        const BruteForceBudget& budget) {
  if (trials < 1) {
    throw malformed_input("estimate_success_rate: trials must be >= 1");
  }
  std::vector<ElementSet> targets = feasible_sets(instance, instance.k, budget);
  ElementSet ground(instance.n);
  for (int e = 0; e < instance.n; ++e) ground[e] = e;

  SuccessRateReport report;
  report.trials = trials;
  report.opt_full = opt_value(instance, ground, instance.k, budget);
  for (int trial = 0; trial < trials; ++trial) {
    Kernel kernel = kernelizer(
        instance, derive_seed(seed, {static_cast<std::uint64_t>(trial)}));
    bool ok = true;
    for (const ElementSet& x_set : targets) {
      if (x_set.empty()) continue;
      if (!check_reachability(instance, kernel.elements, x_set).ok) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++report.successes;
      std::uint64_t opt_kernel =
          opt_value(instance, kernel.elements, instance.k, budget);
      if (opt_kernel != report.opt_full) report.opt_preserved = false;
    }
  }
  return report;
}

CoverabilityAudit check_coverable(const Matroid& m, int cap,
                                  std::int64_t claimed_g,
                                  const BruteForceBudget& budget) {
  check_budget(m.ground_size(), cap, budget, "check_coverable");
  if (!m.loopless()) {
    throw normalization_error("check_coverable: matroid has loops");
  }

  // Parallel class of every element, by min-id representative.
  const ElementSet reps = m.parallel_representatives();
  std::vector<int> class_of(m.ground_size(), -1);
  for (std::size_t j = 0; j < reps.size(); ++j) {
    int single[1] = {reps[j]};
    for (int e : m.span(std::span<const int>(single, 1))) {
      class_of[e] = static_cast<int>(j);
    }
  }

  CoverabilityAudit audit;
  std::vector<char> seen(reps.size(), 0);
  ElementSet current;
  auto consider = [&]() {
    ElementSet sp = m.span(current);
    std::fill(seen.begin(), seen.end(), 0);
    int classes = 0;
    for (int e : sp) {
      if (!seen[class_of[e]]) {
        seen[class_of[e]] = 1;
        ++classes;
      }
    }
    if (classes > audit.max_cover) {
      audit.max_cover = classes;
      audit.worst_witness = current;
    }
  };
  auto recurse = [&](auto&& self, int next) -> void {
    if (!current.empty()) consider();
    if (static_cast<int>(current.size()) == cap) return;
    for (int e = next; e < m.ground_size(); ++e) {
      current.push_back(e);
      if (m.is_independent(current)) self(self, e + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  audit.within_bound = audit.max_cover <= claimed_g;
  return audit;
}

bool good_family_check(const LaminarFamily& family, const DisjointFamily& z,
                       std::span<const int> independent_x, int x) {
  ElementSet x_set = to_canonical_set(independent_x);
  if (!set_contains(x_set, x)) {
    throw malformed_input("good_family_check: x must lie in X");
  }
  ElementSet x_minus = set_erase(x_set, x);

  // Condition 1: a member containing x, and X avoids every other member.
  int x_member = -1;
  for (int id : z.members) {
    if (set_contains(family.node(id).elements, x)) {
      x_member = id;
      break;
    }
  }
  if (x_member < 0) return false;
  for (int id : z.members) {
    if (id == x_member) continue;
    if (!set_intersection(family.node(id).elements, x_set).empty()) {
      return false;
    }
  }

  // Condition 2: no tight set contains any member.
  auto tight = [&](int node) {
    const auto& a = family.node(node);
    return static_cast<int>(
               set_intersection(a.elements, x_minus).size()) == a.cap;
  };
  for (int id : z.members) {
    for (int node = id; node >= 0; node = family.node(node).parent) {
      if (tight(node)) return false;
    }
  }
  return true;
}

}  // namespace matkern
