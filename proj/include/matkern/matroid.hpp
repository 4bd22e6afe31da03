#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matkern/laminar.hpp"
#include "matkern/sets.hpp"

namespace matkern {

using Weights = std::vector<std::uint64_t>;

// Immutable independence oracle over element ids [0, ground_size).
//
// Loop elements (dependent singletons) are detected at construction and
// recorded; elements() is the loop-free ground set used by span, rank bases
// and parallel classes. Queries on sets containing loops simply report
// dependence. All query paths are const and safe for concurrent use.
class Matroid {
 public:
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int ground_size() const { return ground_size_; }
  // Ids this matroid accepts in queries (the restriction subset, else all).
  const ElementSet& domain() const { return domain_; }
  // domain() minus loops; the ground set of the normalized matroid.
  const ElementSet& elements() const { return elements_; }
  const ElementSet& loops() const { return loops_; }
  bool loopless() const { return loops_.empty(); }

  // True iff the set is independent. Accepts any order; throws
  // malformed_input on out-of-range ids, ids outside domain(), or duplicates.
  bool is_independent(std::span<const int> s) const;

  // max{|Y| : Y ⊆ S independent}, via greedy growth (|S| oracle calls).
  int rank(std::span<const int> s) const;

  // { e in elements() : rank(S + e) = rank(S) }, via one basis of S plus one
  // probe per element.
  ElementSet span(std::span<const int> s) const;

  // Minimum-id representative of every parallel class of elements().
  ElementSet parallel_representatives() const;

  std::uint64_t oracle_queries() const { return queries_.load(); }

  virtual std::string class_name() const = 0;

 protected:
  explicit Matroid(int ground_size);

  // Derived constructors: optionally narrow the domain, then detect_loops().
  void set_domain(ElementSet domain);
  void detect_loops();

  // s is sorted, duplicate-free and within domain().
  virtual bool indep_impl(std::span<const int> s) const = 0;

  bool query(std::span<const int> s) const {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return indep_impl(s);
  }

 private:
  ElementSet checked_set(std::span<const int> s) const;

  int ground_size_;
  ElementSet domain_;
  std::vector<char> in_domain_;
  ElementSet elements_;
  ElementSet loops_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// All sets of size at most rank_limit are independent.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank_limit);
  int rank_limit() const { return rank_limit_; }
  std::string class_name() const override { return "uniform"; }

 protected:
  bool indep_impl(std::span<const int> s) const override {
    return static_cast<int>(s.size()) <= rank_limit_;
  }

 private:
  int rank_limit_;
};

// |I ∩ block_j| <= cap_j for blocks partitioning the ground set.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(int ground_size, std::vector<ElementSet> blocks,
                   std::vector<int> caps);
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int element) const { return block_of_[element]; }
  // True when every non-empty block has capacity exactly 1.
  bool is_simple() const { return simple_; }
  std::string class_name() const override { return "partition"; }

 protected:
  bool indep_impl(std::span<const int> s) const override;

 private:
  std::vector<ElementSet> blocks_;
  std::vector<int> caps_;
  std::vector<int> block_of_;
  bool simple_;
};

// Element i is edge i of a multigraph; independent sets are forests.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);
  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::string class_name() const override { return "graphic"; }

 protected:
  bool indep_impl(std::span<const int> s) const override;

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

// Element i is edge i; S is independent iff G - S keeps the component count
// of G. The component count of G is cached at construction.
class CographicMatroid : public Matroid {
 public:
  CographicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);
  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int base_components() const { return base_components_; }
  std::string class_name() const override { return "cographic"; }

 protected:
  bool indep_impl(std::span<const int> s) const override;

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  int base_components_;
};

// S is independent iff the bipartite graph has a matching covering S.
class TransversalMatroid : public Matroid {
 public:
  TransversalMatroid(std::vector<ElementSet> adjacency, int right_count);
  const std::vector<ElementSet>& adjacency() const { return adjacency_; }
  int right_count() const { return right_count_; }
  // Matched right vertex per element of s, or nullopt if s is dependent.
  std::optional<std::vector<int>> cover_matching(std::span<const int> s) const;
  std::string class_name() const override { return "transversal"; }

 protected:
  bool indep_impl(std::span<const int> s) const override;

 private:
  std::vector<ElementSet> adjacency_;
  int right_count_;
};

// |I ∩ A| <= cap(A) for every member A of a laminar family.
class LaminarMatroid : public Matroid {
 public:
  explicit LaminarMatroid(LaminarFamily family);
  const LaminarFamily& family() const { return family_; }
  std::string class_name() const override { return "laminar"; }

 protected:
  bool indep_impl(std::span<const int> s) const override;

 private:
  LaminarFamily family_;
};

// M|U: queries restricted to a subset of the inner domain.
class RestrictionMatroid : public Matroid {
 public:
  RestrictionMatroid(MatroidPtr inner, ElementSet subset);
  const MatroidPtr& inner() const { return inner_; }
  const ElementSet& subset() const { return domain(); }
  std::string class_name() const override { return "restriction"; }

 protected:
  bool indep_impl(std::span<const int> s) const override;

 private:
  MatroidPtr inner_;
};

// Independence additionally requires |S| <= bound.
class TruncationMatroid : public Matroid {
 public:
  TruncationMatroid(MatroidPtr inner, int bound);
  const MatroidPtr& inner() const { return inner_; }
  int bound() const { return bound_; }
  std::string class_name() const override { return "truncation"; }

 protected:
  bool indep_impl(std::span<const int> s) const override;

 private:
  MatroidPtr inner_;
  int bound_;
};

MatroidPtr restrict_to(MatroidPtr m, ElementSet subset);
MatroidPtr truncate(MatroidPtr m, int bound);

// Exhaustively verifies non-emptiness, downward closure and the exchange
// axiom over all subsets of the domain. Refuses domains above 16 elements.
bool check_matroid_axioms(const Matroid& m);

}  // namespace matkern
