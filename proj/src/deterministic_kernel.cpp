#include "matkern/deterministic_kernel.hpp"

#include <string>

#include "matkern/errors.hpp"
#include "matkern/greedy.hpp"

namespace matkern {

Kernel deterministic_kernel(MatroidPtr m0, MatroidPtr m1, std::int64_t g,
                            const Weights& weights, int k) {
  if (!m0 || !m1) throw malformed_input("deterministic_kernel: null matroid");
  const int n = m0->ground_size();
  if (m1->ground_size() != n) {
    throw malformed_input("deterministic_kernel: ground size mismatch");
  }
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw malformed_input(
        "deterministic_kernel: weight vector length mismatch");
  }
  if (k < 1) throw malformed_input("deterministic_kernel: k must be >= 1");
  if (!m1->loopless()) {
    throw normalization_error(
        "deterministic_kernel: the coverable matroid has loops");
  }
  if (g < k) {
    throw contract_error("deterministic_kernel: g(k) = " + std::to_string(g) +
                         " violates g(k) >= k = " + std::to_string(k));
  }

  MatroidPtr m0_trunc = truncate(std::move(m0), k);

  Kernel kernel;
  kernel.algorithm = "deterministic";
  kernel.rounds = g + 1;

  std::vector<char> in_result(n, 0);
  ElementSet working = m0_trunc->domain();
  for (std::int64_t t = 0; t <= g; ++t) {
    if (working.empty()) break;  // later sweeps contribute nothing
    MatroidPtr m0_u = restrict_to(m0_trunc, working);
    MatroidPtr m1_u = restrict_to(m1, working);

    GreedyResult f = greedy(*m0_u, working, k, weights);
    std::vector<char> in_sweep(n, 0);
    for (int e : f.selected) in_sweep[e] = 1;

    ElementSet removed;
    for (int e : f.selected) {
      int single[1] = {e};
      ElementSet span_e = m1_u->span(std::span<const int>(single, 1));
      GreedyResult h = greedy(*m0_u, span_e, k, weights);
      for (int y : h.selected) in_sweep[y] = 1;
      removed = set_union(removed, span_e);
    }

    int sweep_size = 0;
    for (int e = 0; e < n; ++e) {
      if (in_sweep[e]) {
        ++sweep_size;
        in_result[e] = 1;
      }
    }
    kernel.round_log.push_back(sweep_size);
    working = set_difference(working, removed);
  }

  for (int e = 0; e < n; ++e) {
    if (in_result[e]) kernel.elements.push_back(e);
  }
  const std::int64_t bound =
      static_cast<std::int64_t>(k) * static_cast<std::int64_t>(k) * (g + 1);
  if (static_cast<std::int64_t>(kernel.elements.size()) > bound) {
    throw error("deterministic_kernel: internal size bound violated");
  }
  return kernel;
}

}  // namespace matkern
