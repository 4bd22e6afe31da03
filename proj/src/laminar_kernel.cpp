#include "matkern/laminar_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "matkern/errors.hpp"
#include "matkern/greedy.hpp"

namespace matkern {

namespace {

void require_disjoint(const LaminarFamily& family, const DisjointFamily& z) {
  std::size_t total = 0;
  ElementSet all;
  for (int id : z.members) {
    if (id < 0 || id >= family.node_count()) {
      throw malformed_input("disjoint family: node id out of range");
    }
    total += family.node(id).elements.size();
    all = set_union(all, family.node(id).elements);
  }
  if (all.size() != total) {
    throw malformed_input("disjoint family: members overlap");
  }
}

// k^ceil(log2 h) with saturation.
std::uint64_t candidate_bound(int k, int h) {
  int levels = 0;
  while ((1 << levels) < h) ++levels;
  std::uint64_t bound = 1;
  for (int i = 0; i < levels; ++i) {
    if (bound > (1ULL << 62) / static_cast<std::uint64_t>(k)) {
      return ~0ULL;
    }
    bound *= static_cast<std::uint64_t>(k);
  }
  return bound;
}

std::vector<ElementSet> find_candidate_inner(const LaminarFamily& family,
                                             const std::vector<int>& members,
                                             int k, Rng& rng);

std::vector<int> refine_members(const LaminarFamily& family,
                                const std::vector<int>& members, int level) {
  std::vector<int> out;
  std::vector<int> stack;
  for (int id : members) {
    stack.assign(1, id);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (family.node(v).cap <= level) {
        out.push_back(v);
        continue;
      }
      const auto& children = family.node(v).children;
      // push in reverse so the min-element order is preserved on pop
      for (auto it = children.rbegin(); it != children.rend(); ++it) {
        stack.push_back(*it);
      }
    }
  }
  return out;
}

std::vector<ElementSet> find_candidate_inner(const LaminarFamily& family,
                                             const std::vector<int>& members,
                                             int k, Rng& rng) {
  int h = 0;
  for (int id : members) h = std::max(h, family.node(id).cap);
  if (h <= 1) {
    ElementSet all;
    for (int id : members) all = set_union(all, family.node(id).elements);
    return {std::move(all)};
  }
  std::vector<ElementSet> out;
  std::vector<int> first, second;
  for (int i = (h + 1) / 2; i <= h - 1; ++i) {
    first.clear();
    for (int id : refine_members(family, members, i)) {
      if (rng.one_in(static_cast<std::uint64_t>(k))) first.push_back(id);
    }
    second.clear();
    for (int id : refine_members(family, first, h - i)) {
      if (rng.one_in(static_cast<std::uint64_t>(k))) second.push_back(id);
    }
    if (second.empty()) continue;
    std::vector<ElementSet> sub = find_candidate_inner(family, second, k, rng);
    for (auto& s : sub) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

LaminarFamily normalize_laminar(const LaminarFamily& family, int k) {
  if (k < 1) throw malformed_input("normalize_laminar: k must be >= 1");
  const int n = family.ground_size();
  if (n == 0) throw malformed_input("normalize_laminar: empty ground set");

  for (const auto& node : family.nodes()) {
    if (node.cap == 0) {
      throw normalization_error(
          "normalize_laminar: member with capacity 0; its " +
          std::to_string(node.elements.size()) + " element(s) are loops");
    }
  }

  std::vector<std::pair<ElementSet, int>> sets;
  for (const auto& node : family.nodes()) {
    if (static_cast<int>(node.elements.size()) == 1) continue;  // re-added
    if (static_cast<int>(node.elements.size()) == n) continue;  // re-added
    sets.emplace_back(node.elements, std::min(node.cap, k));
  }
  ElementSet ground(n);
  std::iota(ground.begin(), ground.end(), 0);
  int root_cap = k;
  for (const auto& node : family.nodes()) {
    if (static_cast<int>(node.elements.size()) == n) {
      root_cap = std::min(node.cap, k);
    }
  }
  sets.emplace_back(std::move(ground), root_cap);
  for (int e = 0; e < n; ++e) {
    sets.emplace_back(ElementSet{e}, 1);
  }

  LaminarFamily draft(n, std::move(sets));

  // Drop any set whose cap exceeds an ancestor's: its constraint is implied.
  std::vector<char> keep(draft.node_count(), 1);
  std::vector<std::pair<int, int>> stack;  // (node, min cap above)
  for (int r : draft.roots()) stack.emplace_back(r, draft.node(r).cap);
  std::vector<std::pair<ElementSet, int>> kept;
  while (!stack.empty()) {
    auto [v, min_above] = stack.back();
    stack.pop_back();
    int cap = draft.node(v).cap;
    if (cap <= min_above) {
      kept.emplace_back(draft.node(v).elements, cap);
      min_above = std::min(min_above, cap);
    }
    for (int c : draft.node(v).children) stack.emplace_back(c, min_above);
  }

  LaminarFamily out(n, std::move(kept));
  out.normalized_ = true;
  return out;
}

int family_height(const LaminarFamily& family, const DisjointFamily& z) {
  int h = 0;
  for (int id : z.members) h = std::max(h, family.node(id).cap);
  return h;
}

ElementSet family_elements(const LaminarFamily& family,
                           const DisjointFamily& z) {
  ElementSet all;
  for (int id : z.members) all = set_union(all, family.node(id).elements);
  return all;
}

DisjointFamily refine(const LaminarFamily& family, const DisjointFamily& z,
                      int level) {
  if (!family.is_normalized()) {
    throw malformed_input("refine: family must be normalized");
  }
  if (level < 1) throw malformed_input("refine: level must be >= 1");
  require_disjoint(family, z);
  return DisjointFamily{refine_members(family, z.members, level)};
}

std::vector<ElementSet> find_candidate(const LaminarFamily& family,
                                       const DisjointFamily& z, int k,
                                       Rng& rng) {
  if (!family.is_normalized()) {
    throw malformed_input("find_candidate: family must be normalized");
  }
  if (z.members.empty()) {
    throw malformed_input("find_candidate: empty disjoint family");
  }
  if (k < 1) throw malformed_input("find_candidate: k must be >= 1");
  require_disjoint(family, z);
  std::vector<ElementSet> out = find_candidate_inner(family, z.members, k, rng);
  const std::uint64_t bound = candidate_bound(k, family_height(family, z));
  if (out.size() > bound) {
    throw error("find_candidate: internal size bound violated");
  }
  return out;
}

std::int64_t default_rounds_laminar(int k, int d) {
  if (k < 2) {
    throw contract_error(
        "default_rounds_laminar: k < 2 (use the k = 1 shortcut)");
  }
  if (d < 2) throw contract_error("default_rounds_laminar: d must be >= 2");
  int levels = 0;
  while ((1 << levels) < k) ++levels;  // ceil(log2 k)
  const double e = std::exp(1.0);
  const double per_matroid = std::pow(e * k, 2.0 * levels);
  double value = std::log(3.0 * k);
  for (int i = 0; i < d - 1; ++i) value *= per_matroid;
  if (!(value >= 0) || value > 4.6e18) {
    throw error("default_rounds_laminar: round count overflows; pass an "
                "explicit T");
  }
  return static_cast<std::int64_t>(std::ceil(value));
}

Kernel laminar_kernel(const Matroid& m0, std::span<const MatroidPtr> laminars,
                      const Weights& weights, int k, std::uint64_t seed,
                      std::optional<std::int64_t> rounds) {
  const int n = m0.ground_size();
  if (laminars.empty()) {
    throw malformed_input("laminar_kernel: needs at least one laminar "
                          "matroid (d >= 2)");
  }
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw malformed_input("laminar_kernel: weight vector length mismatch");
  }
  if (k < 1) throw malformed_input("laminar_kernel: k must be >= 1");

  std::vector<const LaminarMatroid*> lams;
  for (const MatroidPtr& m : laminars) {
    const auto* lm = dynamic_cast<const LaminarMatroid*>(m.get());
    if (lm == nullptr) {
      throw class_mismatch(
          "laminar_kernel: structured matroids must be laminar");
    }
    if (lm->ground_size() != n) {
      throw malformed_input("laminar_kernel: ground size mismatch");
    }
    lams.push_back(lm);
  }

  if (k == 1) {
    Kernel kernel;
    kernel.algorithm = "laminar";
    kernel.seed = seed;
    std::optional<int> best;
    for (int e = 0; e < n; ++e) {
      bool ok = set_contains(m0.elements(), e);
      for (const auto* lm : lams) {
        if (!ok) break;
        ok = set_contains(lm->elements(), e);
      }
      if (ok && (!best || weights[e] > weights[*best])) best = e;
    }
    if (best) kernel.elements = {*best};
    return kernel;
  }

  std::vector<LaminarFamily> trees;
  trees.reserve(lams.size());
  for (const auto* lm : lams) {
    trees.push_back(normalize_laminar(lm->family(), k));
  }

  const std::int64_t T =
      rounds ? *rounds
             : default_rounds_laminar(k, static_cast<int>(lams.size()) + 1);
  if (T < 0) throw malformed_input("laminar_kernel: negative round count");

  Kernel kernel;
  kernel.algorithm = "laminar";
  kernel.seed = seed;
  kernel.rounds = T;

  std::vector<char> in_result(n, 0);
  std::int64_t size_bound = 0;
  for (std::int64_t t = 0; t < T; ++t) {
    std::vector<std::vector<ElementSet>> families;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(t), i}));
      DisjointFamily z{{trees[i].root()}};
      families.push_back(find_candidate(trees[i], z, k, rng));
    }
    // All (d-1)-wise intersections, deduplicated: identical pools would give
    // identical greedy output.
    std::set<ElementSet> pools;
    std::vector<std::size_t> idx(families.size(), 0);
    bool any_empty = false;
    for (const auto& f : families) any_empty = any_empty || f.empty();
    if (!any_empty) {
      while (true) {
        ElementSet pool = families[0][idx[0]];
        for (std::size_t i = 1; i < families.size() && !pool.empty(); ++i) {
          pool = set_intersection(pool, families[i][idx[i]]);
        }
        pools.insert(std::move(pool));
        std::size_t pos = families.size();
        while (pos > 0 && ++idx[pos - 1] == families[pos - 1].size()) {
          idx[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
    size_bound += static_cast<std::int64_t>(k) *
                  static_cast<std::int64_t>(pools.size());
    std::vector<char> in_round(n, 0);
    for (const ElementSet& pool : pools) {
      GreedyResult picked = greedy(m0, pool, k, weights);
      for (int e : picked.selected) in_round[e] = 1;
    }
    int round_size = 0;
    for (int e = 0; e < n; ++e) {
      if (in_round[e]) {
        ++round_size;
        in_result[e] = 1;
      }
    }
    kernel.round_log.push_back(round_size);
  }
  for (int e = 0; e < n; ++e) {
    if (in_result[e]) kernel.elements.push_back(e);
  }
  if (static_cast<std::int64_t>(kernel.elements.size()) > size_bound &&
      T > 0) {
    throw error("laminar_kernel: internal size bound violated");
  }
  return kernel;
}

}  // namespace matkern
