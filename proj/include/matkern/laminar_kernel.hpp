#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matkern/kernel.hpp"
#include "matkern/laminar.hpp"
#include "matkern/rng.hpp"

namespace matkern {

// Mutually disjoint member nodes of a LaminarFamily.
struct DisjointFamily {
  std::vector<int> members;
};

// Root = whole ground set with cap min(c(E), k), every singleton present with
// cap 1, caps clamped to k, caps non-decreasing child-to-parent (violating
// sets dropped). Throws normalization_error on capacity-0 members.
LaminarFamily normalize_laminar(const LaminarFamily& family, int k);

// max cap among members.
int family_height(const LaminarFamily& family, const DisjointFamily& z);

// Union of the members' element sets (E(Z)).
ElementSet family_elements(const LaminarFamily& family,
                           const DisjointFamily& z);

// Maximal members of the family below z with cap <= level: tree descent
// stopping at the first node of cap <= level. Partitions E(Z).
DisjointFamily refine(const LaminarFamily& family, const DisjointFamily& z,
                      int level);

// The recursive candidate sampler. Height 1 returns {E(Z)}; otherwise, for
// each level i in [ceil(h/2), h-1], refines and subsamples twice with
// probability 1/k each and recurses. Output size is at most k^ceil(log2 h),
// asserted on every call.
std::vector<ElementSet> find_candidate(const LaminarFamily& family,
                                       const DisjointFamily& z, int k,
                                       Rng& rng);

// ceil(ln(3k) / p^(d-1)) with p = ((e*k)^-2)^ceil(log2 k), the per-matroid
// success bound of the candidate sampler (two 1/(ek) samplings per halving
// level).
std::int64_t default_rounds_laminar(int k, int d);

// T rounds; per round each laminar matroid contributes a candidate family,
// their (d-1)-wise intersections are greedily filtered against m0.
Kernel laminar_kernel(const Matroid& m0, std::span<const MatroidPtr> laminars,
                      const Weights& weights, int k, std::uint64_t seed,
                      std::optional<std::int64_t> rounds = {});

}  // namespace matkern
