#include "matkern/transversal_kernel.hpp"

#include <algorithm>
#include <string>

#include "matkern/errors.hpp"
#include "matkern/sampling_kernel.hpp"

namespace matkern {

LiftedMatroid::LiftedMatroid(MatroidPtr inner, std::vector<int> phi0)
    : Matroid(static_cast<int>(phi0.size())),
      inner_(std::move(inner)),
      phi0_(std::move(phi0)) {
  if (!inner_) throw malformed_input("lifted: null inner matroid");
  for (int u : phi0_) {
    if (u < 0 || u >= inner_->ground_size()) {
      throw malformed_input("lifted: phi0 image out of range");
    }
  }
  detect_loops();
}

bool LiftedMatroid::indep_impl(std::span<const int> s) const {
  ElementSet base;
  base.reserve(s.size());
  for (int t : s) base.push_back(phi0_[t]);
  std::sort(base.begin(), base.end());
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    if (base[i] == base[i + 1]) return false;
  }
  return inner_->is_independent(base);
}

TransversalReduction build_reduction(MatroidPtr m0,
                                     std::span<const MatroidPtr> transversals,
                                     const Weights& weights,
                                     std::int64_t lift_cap) {
  if (!m0) throw malformed_input("build_reduction: null arbitrary matroid");
  const int n = m0->ground_size();
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw malformed_input("build_reduction: weight vector length mismatch");
  }
  std::vector<const TransversalMatroid*> graphs;
  for (const MatroidPtr& m : transversals) {
    const auto* tm = dynamic_cast<const TransversalMatroid*>(m.get());
    if (tm == nullptr) {
      throw class_mismatch(
          "build_reduction: structured matroids must be transversal");
    }
    if (tm->ground_size() != n) {
      throw malformed_input("build_reduction: ground size mismatch");
    }
    graphs.push_back(tm);
  }
  if (graphs.empty()) {
    throw malformed_input("build_reduction: needs at least one transversal "
                          "matroid (d >= 2)");
  }

  std::int64_t total = 0;
  for (int u = 0; u < n; ++u) {
    std::int64_t tuples_of_u = 1;
    for (const auto* tm : graphs) {
      const std::int64_t deg =
          static_cast<std::int64_t>(tm->adjacency()[u].size());
      if (deg == 0) {
        throw normalization_error("build_reduction: element " +
                                  std::to_string(u) +
                                  " has degree 0 (a loop) in some graph");
      }
      tuples_of_u *= deg;
      if (tuples_of_u > lift_cap) break;
    }
    total += tuples_of_u;
    if (total > lift_cap) {
      throw budget_exceeded("build_reduction: lifted ground set needs more "
                            "than " +
                            std::to_string(lift_cap) + " tuples");
    }
  }

  TransversalReduction red;
  red.lift.phi0.reserve(total);
  red.lift.phi_right.assign(graphs.size(), {});
  for (auto& v : red.lift.phi_right) v.reserve(total);

  // Tuples in lexicographic order of (u, edge choice 0, ..., edge choice d-2)
  // with the last graph's choice moving fastest.
  std::vector<std::size_t> choice(graphs.size());
  for (int u = 0; u < n; ++u) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      red.lift.phi0.push_back(u);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        red.lift.phi_right[i].push_back(graphs[i]->adjacency()[u][choice[i]]);
      }
      std::size_t pos = graphs.size();
      while (pos > 0 &&
             ++choice[pos - 1] == graphs[pos - 1]->adjacency()[u].size()) {
        choice[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }

  const int v_count = static_cast<int>(red.lift.phi0.size());
  red.lifted_m0 = std::make_shared<LiftedMatroid>(m0, red.lift.phi0);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::vector<ElementSet> blocks(graphs[i]->right_count());
    for (int t = 0; t < v_count; ++t) {
      blocks[red.lift.phi_right[i][t]].push_back(t);
    }
    std::vector<int> caps(blocks.size(), 1);
    red.lifted_parts.push_back(std::make_shared<PartitionMatroid>(
        v_count, std::move(blocks), std::move(caps)));
  }
  red.lifted_weights.reserve(v_count);
  for (int t = 0; t < v_count; ++t) {
    red.lifted_weights.push_back(weights[red.lift.phi0[t]]);
  }
  return red;
}

Kernel transversal_kernel(MatroidPtr m0,
                          std::span<const MatroidPtr> transversals,
                          const Weights& weights, int k, std::uint64_t seed,
                          std::optional<std::int64_t> rounds,
                          std::int64_t lift_cap) {
  TransversalReduction red =
      build_reduction(std::move(m0), transversals, weights, lift_cap);
  Kernel lifted = partition_kernel(*red.lifted_m0, red.lifted_parts,
                                   red.lifted_weights, k, seed, rounds);
  Kernel kernel;
  kernel.algorithm = "transversal";
  kernel.seed = seed;
  kernel.rounds = lifted.rounds;
  kernel.round_log = std::move(lifted.round_log);
  for (int t : lifted.elements) kernel.elements.push_back(red.lift.phi0[t]);
  kernel.elements = to_canonical_set(kernel.elements);
  return kernel;
}

MatroidPtr partition_to_transversal(const PartitionMatroid& p) {
  std::vector<ElementSet> adjacency(p.ground_size());
  int next_right = 0;
  for (int j = 0; j < p.block_count(); ++j) {
    const ElementSet& block = p.blocks()[j];
    if (block.empty()) continue;  // no vertices emitted
    if (p.caps()[j] == 0) {
      throw normalization_error(
          "partition_to_transversal: block " + std::to_string(j) +
          " has capacity 0; its elements are loops");
    }
    ElementSet rights;
    for (int c = 0; c < p.caps()[j]; ++c) rights.push_back(next_right++);
    for (int e : block) adjacency[e] = rights;
  }
  return std::make_shared<TransversalMatroid>(std::move(adjacency),
                                              next_right);
}

}  // namespace matkern
