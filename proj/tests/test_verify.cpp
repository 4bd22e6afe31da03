#include "matkern/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>

#include "matkern/errors.hpp"
#include "matkern/generate.hpp"
#include "matkern/rng.hpp"
#include "support.hpp"

using namespace matkern;

namespace {

Instance make_instance(int n, int k, Weights weights,
                       std::vector<MatroidPtr> matroids) {
  Instance inst;
  inst.name = "test";
  inst.n = n;
  inst.k = k;
  inst.weights = std::move(weights);
  inst.matroids = std::move(matroids);
  inst.validate();
  return inst;
}

}  // namespace

TEST_CASE("enumerate_feasible examples") {
  auto rank1 = std::make_shared<UniformMatroid>(2, 1);
  Instance two = make_instance(2, 2, {1, 1}, {rank1, rank1});
  std::vector<ElementSet> expected{{}, {0}, {1}};
  CHECK(feasible_sets(two, 2) == expected);

  auto triangle = std::make_shared<GraphicMatroid>(
      3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
  auto blocks = std::make_shared<PartitionMatroid>(
      3, std::vector<ElementSet>{{0}, {1, 2}}, std::vector<int>{1, 1});
  Instance inter = make_instance(3, 2, {1, 1, 1}, {triangle, blocks});
  std::vector<ElementSet> expected2{{}, {0}, {0, 1}, {0, 2}, {1}, {2}};
  CHECK(feasible_sets(inter, 2) == expected2);
}

TEST_CASE("enumerate_feasible matches the naive subset filter") {
  for (const char* kind : {"partition", "coverable-graphic", "laminar"}) {
    GenParams p;
    p.n = 10;
    p.k = 3;
    Instance inst = generate(kind, p, 17);
    auto got = feasible_sets(inst, inst.k);
    std::vector<ElementSet> naive;
    for (std::uint32_t mask = 0; mask < (1u << inst.n); ++mask) {
      if (std::popcount(mask) > inst.k) continue;
      ElementSet s;
      for (int i = 0; i < inst.n; ++i) {
        if (mask & (1u << i)) s.push_back(i);
      }
      if (inst.feasible(s)) naive.push_back(s);
    }
    std::sort(naive.begin(), naive.end());
    std::sort(got.begin(), got.end());
    CHECK(got == naive);
    CHECK(std::find(got.begin(), got.end(), ElementSet{}) != got.end());
  }
}

TEST_CASE("enumerate_feasible refuses over budget") {
  auto big = std::make_shared<UniformMatroid>(41, 2);
  Instance inst = make_instance(41, 2, Weights(41, 1), {big});
  CHECK_THROWS_AS(feasible_sets(inst, 2), budget_exceeded);
  auto small = std::make_shared<UniformMatroid>(5, 5);
  Instance deep = make_instance(5, 6, Weights(5, 1), {small});
  CHECK_THROWS_AS(feasible_sets(deep, 6), budget_exceeded);
}

TEST_CASE("opt_value examples") {
  auto m0 = std::make_shared<UniformMatroid>(4, 2);
  auto m1 = std::make_shared<PartitionMatroid>(
      4, std::vector<ElementSet>{{0, 1}, {2, 3}}, std::vector<int>{1, 1});
  Instance inst = make_instance(4, 2, {4, 3, 2, 1}, {m0, m1});
  CHECK(opt_value(inst, ElementSet{}, 2) == 0);
  CHECK(opt_value(inst, support::full_ground(4), 2) == 6);  // {a, c}
  auto [value, solution] = opt_solution(inst, support::full_ground(4), 2);
  CHECK(value == 6);
  CHECK(solution == ElementSet{0, 2});
}

TEST_CASE("opt is monotone in the domain and matches naive enumeration") {
  GenParams p;
  p.n = 11;
  p.k = 3;
  for (std::uint64_t seed = 3; seed <= 6; ++seed) {
    Instance inst = generate("partition", p, seed);
    std::uint64_t naive_best = 0;
    for (const ElementSet& s : feasible_sets(inst, inst.k)) {
      std::uint64_t total = 0;
      for (int e : s) total += inst.weights[e];
      naive_best = std::max(naive_best, total);
    }
    CHECK(opt_value(inst, support::full_ground(p.n), inst.k) == naive_best);

    Rng rng(derive_seed(seed, {2}));
    ElementSet domain;
    for (int e = 0; e < p.n; ++e) {
      if (rng.one_in(2)) domain.push_back(e);
    }
    CHECK(opt_value(inst, domain, inst.k) <= naive_best);
  }
}

TEST_CASE("check_single_exc examples") {
  GenParams p;
  p.n = 9;
  p.k = 2;
  Instance inst = generate("coverable-cographic", p, 12);
  CHECK(check_single_exc(inst, support::full_ground(p.n), inst.k)
            .single_exc_violations.empty());
  // The empty kernel violates every feasible singleton.
  CHECK_FALSE(check_single_exc(inst, ElementSet{}, inst.k)
                  .single_exc_violations.empty());

  auto rank1 = std::make_shared<UniformMatroid>(2, 1);
  Instance tiny = make_instance(2, 1, {5, 3}, {rank1});
  VerificationReport report = check_single_exc(tiny, ElementSet{1}, 1);
  REQUIRE(report.single_exc_violations.size() == 1);
  CHECK(report.single_exc_violations[0].first == ElementSet{0});
  CHECK(report.single_exc_violations[0].second == 0);
}

TEST_CASE("check_reachability identity and empty cases") {
  GenParams p;
  p.n = 10;
  p.k = 3;
  Instance inst = generate("transversal", p, 5);
  auto feasible = feasible_sets(inst, inst.k);
  for (const ElementSet& x_set : feasible) {
    ReachabilityResult r = check_reachability(inst, x_set, x_set);
    CHECK(r.ok);
    CHECK(r.witness == std::vector<int>(x_set.begin(), x_set.end()));
  }
  ReachabilityResult empty = check_reachability(inst, ElementSet{}, {});
  CHECK(empty.ok);
  CHECK(empty.witness.empty());

  ElementSet infeasible{0, 1, 2, 3};
  if (!inst.feasible(infeasible)) {
    CHECK_THROWS_AS(
        check_reachability(inst, support::full_ground(p.n), infeasible),
        malformed_input);
  }
}

TEST_CASE("zero single-exchange violations imply full reachability") {
  GenParams p;
  p.n = 9;
  p.k = 2;
  for (std::uint64_t seed = 20; seed < 26; ++seed) {
    Instance inst = generate("partition", p, seed);
    Rng rng(derive_seed(seed, {4}));
    ElementSet kernel;
    for (int e = 0; e < p.n; ++e) {
      if (rng.one_in(2)) kernel.push_back(e);
    }
    const bool no_violations =
        check_single_exc(inst, kernel, inst.k).single_exc_violations.empty();
    bool all_reachable = true;
    for (const ElementSet& x_set : feasible_sets(inst, inst.k)) {
      if (x_set.empty()) continue;
      if (!check_reachability(inst, kernel, x_set).ok) {
        all_reachable = false;
        break;
      }
    }
    if (no_violations) CHECK(all_reachable);
    if (!all_reachable) CHECK_FALSE(no_violations);
  }
}

TEST_CASE("estimate_success_rate on the identity kernelizer") {
  GenParams p;
  p.n = 12;
  p.k = 2;
  Instance inst = generate("partition", p, 31);
  Kernelizer whole_ground = [](const Instance& instance, std::uint64_t seed) {
    Kernel kernel;
    kernel.algorithm = "identity";
    kernel.seed = seed;
    kernel.elements = support::full_ground(instance.n);
    return kernel;
  };
  SuccessRateReport report = estimate_success_rate(inst, whole_ground, 10, 1);
  CHECK(report.successes == 10);
  CHECK(report.fraction() == doctest::Approx(1.0));
  CHECK(report.opt_preserved);
}

TEST_CASE("check_coverable on partition, graphic, uniform") {
  // Simple partition matroids are k-coverable.
  for (std::uint64_t seed = 40; seed < 44; ++seed) {
    GenParams p;
    p.n = 14;
    p.k = 3;
    Instance inst = generate("partition", p, seed);
    CoverabilityAudit audit = check_coverable(*inst.matroids[1], 3, 3);
    CHECK(audit.within_bound);
    CHECK(audit.max_cover <= 3);
  }
  // Graphic matroids stay within k(k+1)/2.
  for (std::uint64_t seed = 50; seed < 54; ++seed) {
    GenParams p;
    p.n = 14;
    p.k = 3;
    Instance inst = generate("coverable-graphic", p, seed);
    CoverabilityAudit audit = check_coverable(*inst.matroids[1], 3, 6);
    CHECK(audit.within_bound);
  }
  // A uniform matroid of rank k on a big ground set is not g-coverable: a
  // basis spans everything and the only covers are all-singleton.
  UniformMatroid uniform(30, 3);
  CoverabilityAudit audit = check_coverable(uniform, 3, 20);
  CHECK_FALSE(audit.within_bound);
  CHECK(audit.max_cover == 30);
}

TEST_CASE("good_family_check conditions") {
  LaminarFamily raw(6, {{{0, 1}, 1}, {{2, 3}, 1}});
  LaminarFamily fam = normalize_laminar(raw, 2);
  REQUIRE(fam.is_normalized());

  const int root = fam.root();
  // {E} is good for every independent (X, x).
  LaminarMatroid matroid(fam);
  ElementSet x_set{0, 2};
  REQUIRE(matroid.is_independent(x_set));
  CHECK(good_family_check(fam, {{root}}, x_set, 0));
  CHECK(good_family_check(fam, {{root}}, x_set, 2));

  // Two members meeting X violate condition 1.
  int node_a = -1, node_b = -1;
  for (int id = 0; id < fam.node_count(); ++id) {
    if (fam.node(id).elements == ElementSet{0, 1}) node_a = id;
    if (fam.node(id).elements == ElementSet{2, 3}) node_b = id;
  }
  REQUIRE(node_a >= 0);
  REQUIRE(node_b >= 0);
  CHECK_FALSE(good_family_check(fam, {{node_a, node_b}}, x_set, 0));

  // A member inside a tight set violates condition 2: with X - x = {2},
  // the set {2,3} (cap 1) is tight and contains leaf 3.
  CHECK_FALSE(
      good_family_check(fam, {{fam.leaf_of(0), fam.leaf_of(3)}}, x_set, 0));
  // Leaf 4 sits under no tight set, so this family is good.
  CHECK(good_family_check(fam, {{fam.leaf_of(0), fam.leaf_of(4)}}, x_set, 0));
}
