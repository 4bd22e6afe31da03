#include "matkern/laminar_kernel.hpp"

#include <doctest.h>

#include <algorithm>

#include "matkern/driver.hpp"
#include "matkern/errors.hpp"
#include "matkern/generate.hpp"
#include "matkern/verify.hpp"
#include "support.hpp"

using namespace matkern;

namespace {

std::vector<ElementSet> member_sets(const LaminarFamily& fam,
                                    const DisjointFamily& z) {
  std::vector<ElementSet> out;
  for (int id : z.members) out.push_back(fam.node(id).elements);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("normalize_laminar adds the root and singletons") {
  LaminarFamily raw(4, {{{0, 1, 2, 3}, 5}});
  LaminarFamily fam = normalize_laminar(raw, 2);
  CHECK(fam.is_normalized());
  CHECK(fam.node_count() == 5);  // root + 4 singletons
  CHECK(fam.node(fam.root()).cap == 2);
  for (int e = 0; e < 4; ++e) {
    REQUIRE(fam.leaf_of(e) >= 0);
    CHECK(fam.node(fam.leaf_of(e)).cap == 1);
  }
}

TEST_CASE("normalize_laminar is idempotent") {
  LaminarFamily raw(6, {{{0, 1}, 1}, {{2, 3, 4}, 2}});
  LaminarFamily once = normalize_laminar(raw, 3);
  LaminarFamily twice = normalize_laminar(once, 3);
  CHECK(once == twice);
}

TEST_CASE("normalize_laminar drops cap-inverted nested sets") {
  // c({0,1}) = 3 > c({0,1,2}) = 2: the inner set is implied and dropped.
  LaminarFamily raw(4, {{{0, 1}, 3}, {{0, 1, 2}, 2}});
  LaminarFamily fam = normalize_laminar(raw, 3);
  for (const auto& node : fam.nodes()) {
    CHECK(node.elements != ElementSet{0, 1});
  }
  // Its replacement constraint survives through the parent.
  LaminarMatroid m(fam);
  CHECK(m.is_independent(ElementSet{0, 1}));
  CHECK_FALSE(m.is_independent(ElementSet{0, 1, 2}));
}

TEST_CASE("normalize_laminar rejects capacity zero") {
  LaminarFamily raw(3, {{{0, 1}, 0}});
  CHECK_THROWS_AS(normalize_laminar(raw, 2), normalization_error);
}

TEST_CASE("refine follows the tree down to the wanted capacity") {
  LaminarFamily raw(4, {{{0, 1}, 1}, {{2, 3}, 2}, {{0, 1, 2, 3}, 3}});
  LaminarFamily fam = normalize_laminar(raw, 3);
  DisjointFamily z{{fam.root()}};
  CHECK(family_height(fam, z) == 3);

  CHECK(member_sets(fam, refine(fam, z, 1)) ==
        std::vector<ElementSet>{{0, 1}, {2}, {3}});
  CHECK(member_sets(fam, refine(fam, z, 2)) ==
        std::vector<ElementSet>{{0, 1}, {2, 3}});
  CHECK(member_sets(fam, refine(fam, z, 3)) ==
        std::vector<ElementSet>{{0, 1, 2, 3}});

  // Every refinement partitions E(Z).
  for (int level = 1; level <= 3; ++level) {
    DisjointFamily r = refine(fam, z, level);
    CHECK(family_elements(fam, r) == family_elements(fam, z));
    std::size_t total = 0;
    for (int id : r.members) total += fam.node(id).elements.size();
    CHECK(total == family_elements(fam, z).size());
  }
  CHECK_THROWS_AS(refine(fam, z, 0), malformed_input);
}

TEST_CASE("find_candidate height-1 base case returns E(Z)") {
  LaminarFamily raw(4, {{{0, 1, 2, 3}, 1}});
  LaminarFamily fam = normalize_laminar(raw, 1);  // every cap is 1
  Rng rng(1);
  for (int run = 0; run < 20; ++run) {
    auto out = find_candidate(fam, {{fam.root()}}, 2, rng);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == ElementSet{0, 1, 2, 3});
  }
}

TEST_CASE("find_candidate size bound holds on every run") {
  // k = 4, height 4: at most k^ceil(log2 h) = 16 subsets.
  LaminarFamily raw(8, {{{0, 1, 2, 3}, 2}, {{4, 5, 6, 7}, 3}});
  LaminarFamily fam = normalize_laminar(raw, 4);
  DisjointFamily z{{fam.root()}};
  CHECK(family_height(fam, z) == 4);
  Rng rng(99);
  for (int run = 0; run < 500; ++run) {
    auto out = find_candidate(fam, z, 4, rng);
    CHECK(out.size() <= 16);
  }
}

TEST_CASE("default_rounds_laminar values and errors") {
  CHECK(default_rounds_laminar(2, 2) == 53);    // ceil(ln6 (2e)^2)
  CHECK(default_rounds_laminar(3, 2) == 9718);  // ceil(ln9 (3e)^4)
  CHECK(default_rounds_laminar(2, 3) == 1566);  // ceil(ln6 (2e)^4)
  CHECK_THROWS_AS(default_rounds_laminar(1, 2), contract_error);
  CHECK_THROWS_AS(default_rounds_laminar(2, 1), contract_error);
}

TEST_CASE("good families with height 1 give exchangeable base sets") {
  // Whenever the brute-force good-family check passes for a height-1 family,
  // E(Z) is an (X, x)-exchangeable set.
  LaminarFamily raw(6, {{{0, 1}, 1}, {{2, 3}, 1}, {{4, 5}, 2}});
  LaminarFamily fam = normalize_laminar(raw, 2);
  LaminarMatroid matroid(fam);

  ElementSet cap1_nodes;
  for (int id = 0; id < fam.node_count(); ++id) {
    if (fam.node(id).cap == 1) cap1_nodes.push_back(id);
  }
  const int m = static_cast<int>(cap1_nodes.size());
  REQUIRE(m <= 12);

  for (const ElementSet& x_set : {ElementSet{0, 2}, ElementSet{0, 4},
                                  ElementSet{4, 5}, ElementSet{1}}) {
    REQUIRE(matroid.is_independent(x_set));
    for (int x : x_set) {
      ElementSet without = set_erase(x_set, x);
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        DisjointFamily z;
        for (int i = 0; i < m; ++i) {
          if (mask & (1u << i)) z.members.push_back(cap1_nodes[i]);
        }
        // Skip overlapping member combinations.
        ElementSet all;
        std::size_t total = 0;
        for (int id : z.members) {
          all = set_union(all, fam.node(id).elements);
          total += fam.node(id).elements.size();
        }
        if (all.size() != total) continue;
        if (!good_family_check(fam, z, x_set, x)) continue;

        CHECK(set_contains(all, x));
        for (int y : all) {
          if (set_contains(without, y)) continue;
          CHECK(matroid.is_independent(set_insert(without, y)));
        }
      }
    }
  }
}

TEST_CASE("find_candidate produces exchangeable sets often enough") {
  // Two level-1 blocks; for X = {0, 4}, x = 0 the output is exchangeable
  // exactly when the sampled family is {block of 0}; the per-run probability
  // is 3/16, well above the bound 1/(2e)^2 used by the round formula.
  LaminarFamily raw(8, {{{0, 1, 2, 3}, 1}, {{4, 5, 6, 7}, 1}});
  LaminarFamily fam = normalize_laminar(raw, 2);
  LaminarMatroid matroid(fam);
  ElementSet x_set{0, 4};
  REQUIRE(matroid.is_independent(x_set));
  ElementSet without{4};

  const int runs = 2000;
  int hits = 0;
  Rng rng(2024);
  for (int run = 0; run < runs; ++run) {
    for (const ElementSet& y : find_candidate(fam, {{fam.root()}}, 2, rng)) {
      if (!set_contains(y, 0)) continue;
      bool exchangeable = true;
      for (int e : y) {
        if (set_contains(without, e)) continue;
        if (!matroid.is_independent(set_insert(without, e))) {
          exchangeable = false;
          break;
        }
      }
      if (exchangeable) {
        ++hits;
        break;
      }
    }
  }
  const double bound = 1.0 / (2.0 * std::exp(1.0) * 2.0 * std::exp(1.0));
  CHECK(static_cast<double>(hits) / runs >= bound);
}

TEST_CASE("laminar_kernel validation and k=1 shortcut") {
  GenParams p;
  p.n = 10;
  p.k = 2;
  Instance inst = generate("laminar", p, 6);
  std::vector<MatroidPtr> wrong{std::make_shared<UniformMatroid>(10, 2)};
  CHECK_THROWS_AS(
      laminar_kernel(*inst.matroids[0], wrong, inst.weights, 2, 0),
      class_mismatch);

  std::vector<MatroidPtr> lams(inst.matroids.begin() + 1,
                               inst.matroids.end());
  Kernel k1 = laminar_kernel(*inst.matroids[0], lams, inst.weights, 1, 0);
  CHECK(k1.elements.size() <= 1);
  CHECK(k1.rounds == 0);
}

TEST_CASE("laminar_kernel respects the per-round counting bound") {
  GenParams p;
  p.n = 12;
  p.k = 2;
  Instance inst = generate("laminar", p, 14);
  std::vector<MatroidPtr> lams(inst.matroids.begin() + 1,
                               inst.matroids.end());
  Kernel kernel = laminar_kernel(*inst.matroids[0], lams, inst.weights, 2, 3,
                                 40);
  CHECK(kernel.rounds == 40);
  CHECK(kernel.round_log.size() == 40);
  // Per round at most k * |Y| elements with |Y| <= k^ceil(log2 k) = 2.
  for (int size : kernel.round_log) CHECK(size <= 4);
  // Determinism.
  Kernel again = laminar_kernel(*inst.matroids[0], lams, inst.weights, 2, 3,
                                40);
  CHECK(kernel.elements == again.elements);
}

TEST_CASE("laminar_kernel reaches the statistical target on two levels") {
  GenParams p;
  p.n = 12;
  p.k = 2;
  p.d = 2;
  p.depth = 2;
  Instance inst = generate("laminar", p, 25);
  SuccessRateReport report =
      estimate_success_rate(inst, make_kernelizer(Alg::laminar), 100, 8);
  CHECK(report.successes >= 60);
  CHECK(report.opt_preserved);
}
