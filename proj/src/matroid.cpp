#include "matkern/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "matkern/dsu.hpp"
#include "matkern/errors.hpp"

namespace matkern {

Matroid::Matroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) throw malformed_input("matroid: negative ground size");
  domain_.resize(ground_size);
  std::iota(domain_.begin(), domain_.end(), 0);
  in_domain_.assign(ground_size, 1);
}

void Matroid::set_domain(ElementSet domain) {
  if (!is_canonical_set(domain) ||
      (!domain.empty() && domain.back() >= ground_size_)) {
    throw malformed_input("matroid: invalid domain subset");
  }
  domain_ = std::move(domain);
  in_domain_.assign(ground_size_, 0);
  for (int e : domain_) in_domain_[e] = 1;
}

void Matroid::detect_loops() {
  elements_.clear();
  loops_.clear();
  int single[1];
  for (int e : domain_) {
    single[0] = e;
    if (query(std::span<const int>(single, 1))) {
      elements_.push_back(e);
    } else {
      loops_.push_back(e);
    }
  }
}

ElementSet Matroid::checked_set(std::span<const int> s) const {
  ElementSet canon(s.begin(), s.end());
  std::sort(canon.begin(), canon.end());
  for (std::size_t i = 0; i < canon.size(); ++i) {
    int e = canon[i];
    if (e < 0 || e >= ground_size_ || !in_domain_[e]) {
      throw malformed_input("matroid: element id " + std::to_string(e) +
                            " outside the ground set");
    }
    if (i > 0 && canon[i - 1] == e) {
      throw malformed_input("matroid: duplicate element id " +
                            std::to_string(e));
    }
  }
  return canon;
}

bool Matroid::is_independent(std::span<const int> s) const {
  return query(checked_set(s));
}

int Matroid::rank(std::span<const int> s) const {
  ElementSet canon = checked_set(s);
  ElementSet basis;
  basis.reserve(canon.size());
  for (int e : canon) {
    ElementSet probe = set_insert(basis, e);
    if (query(probe)) basis = std::move(probe);
  }
  return static_cast<int>(basis.size());
}

ElementSet Matroid::span(std::span<const int> s) const {
  ElementSet canon = checked_set(s);
  ElementSet basis;
  basis.reserve(canon.size());
  for (int e : canon) {
    ElementSet probe = set_insert(basis, e);
    if (query(probe)) basis = std::move(probe);
  }
  // e lies in span(S) iff e is in the basis or basis + e is dependent.
  ElementSet result;
  for (int e : elements_) {
    if (set_contains(basis, e)) {
      result.push_back(e);
      continue;
    }
    ElementSet probe = set_insert(basis, e);
    if (!query(probe)) result.push_back(e);
  }
  return result;
}

ElementSet Matroid::parallel_representatives() const {
  // Two non-loops are parallel iff their pair is dependent; this is an
  // equivalence relation, so one ascending sweep assigns min-id reps.
  ElementSet reps;
  std::vector<char> assigned(ground_size_, 0);
  int pair[2];
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    int e = elements_[i];
    if (assigned[e]) continue;
    assigned[e] = 1;
    reps.push_back(e);
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      int f = elements_[j];
      if (assigned[f]) continue;
      pair[0] = e;
      pair[1] = f;
      if (!query(std::span<const int>(pair, 2))) assigned[f] = 1;
    }
  }
  return reps;
}

UniformMatroid::UniformMatroid(int ground_size, int rank_limit)
    : Matroid(ground_size), rank_limit_(rank_limit) {
  if (rank_limit < 0) throw malformed_input("uniform: negative rank limit");
  detect_loops();
}

PartitionMatroid::PartitionMatroid(int ground_size,
                                   std::vector<ElementSet> blocks,
                                   std::vector<int> caps)
    : Matroid(ground_size), blocks_(std::move(blocks)), caps_(std::move(caps)) {
  if (blocks_.size() != caps_.size()) {
    throw malformed_input("partition: blocks/caps length mismatch");
  }
  block_of_.assign(ground_size, -1);
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (caps_[j] < 0) throw malformed_input("partition: negative capacity");
    blocks_[j] = to_canonical_set(blocks_[j]);
    for (int e : blocks_[j]) {
      if (e < 0 || e >= ground_size) {
        throw malformed_input("partition: element id out of range");
      }
      if (block_of_[e] != -1) {
        throw malformed_input("partition: element " + std::to_string(e) +
                              " appears in two blocks");
      }
      block_of_[e] = static_cast<int>(j);
    }
  }
  for (int e = 0; e < ground_size; ++e) {
    if (block_of_[e] == -1) {
      throw malformed_input("partition: element " + std::to_string(e) +
                            " is in no block");
    }
  }
  simple_ = true;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (!blocks_[j].empty() && caps_[j] != 1) simple_ = false;
  }
  detect_loops();
}

bool PartitionMatroid::indep_impl(std::span<const int> s) const {
  std::vector<int> count(blocks_.size(), 0);
  for (int e : s) {
    int j = block_of_[e];
    if (++count[j] > caps_[j]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int vertex_count,
                               std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())),
      vertex_count_(vertex_count),
      edges_(std::move(edges)) {
  if (vertex_count < 0) throw malformed_input("graphic: negative vertex count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw malformed_input("graphic: edge endpoint out of range");
    }
  }
  detect_loops();
}

bool GraphicMatroid::indep_impl(std::span<const int> s) const {
  DisjointSets dsu(vertex_count_);
  for (int e : s) {
    if (!dsu.unite(edges_[e].first, edges_[e].second)) return false;
  }
  return true;
}

CographicMatroid::CographicMatroid(int vertex_count,
                                   std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())),
      vertex_count_(vertex_count),
      edges_(std::move(edges)) {
  if (vertex_count < 0) {
    throw malformed_input("cographic: negative vertex count");
  }
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw malformed_input("cographic: edge endpoint out of range");
    }
  }
  DisjointSets dsu(vertex_count_);
  for (const auto& [u, v] : edges_) dsu.unite(u, v);
  base_components_ = dsu.components();
  detect_loops();
}

bool CographicMatroid::indep_impl(std::span<const int> s) const {
  DisjointSets dsu(vertex_count_);
  std::size_t next = 0;
  for (int e = 0; e < ground_size(); ++e) {
    if (next < s.size() && s[next] == e) {
      ++next;
      continue;
    }
    dsu.unite(edges_[e].first, edges_[e].second);
  }
  return dsu.components() == base_components_;
}

TransversalMatroid::TransversalMatroid(std::vector<ElementSet> adjacency,
                                       int right_count)
    : Matroid(static_cast<int>(adjacency.size())),
      adjacency_(std::move(adjacency)),
      right_count_(right_count) {
  if (right_count < 0) {
    throw malformed_input("transversal: negative right side");
  }
  for (auto& neigh : adjacency_) {
    neigh = to_canonical_set(neigh);
    if (!neigh.empty() && (neigh.front() < 0 || neigh.back() >= right_count)) {
      throw malformed_input("transversal: right vertex id out of range");
    }
  }
  detect_loops();
}

std::optional<std::vector<int>> TransversalMatroid::cover_matching(
    std::span<const int> s) const {
  // Augmenting-path matching restricted to s; O(|s| * edges).
  std::vector<int> right_match(right_count_, -1);  // right -> index into s
  std::vector<char> visited(right_count_, 0);
  auto augment = [&](auto&& self, int idx) -> bool {
    for (int w : adjacency_[s[idx]]) {
      if (visited[w]) continue;
      visited[w] = 1;
      if (right_match[w] == -1 || self(self, right_match[w])) {
        right_match[w] = idx;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, static_cast<int>(i))) return std::nullopt;
  }
  std::vector<int> matched(s.size(), -1);
  for (int w = 0; w < right_count_; ++w) {
    if (right_match[w] != -1) matched[right_match[w]] = w;
  }
  return matched;
}

bool TransversalMatroid::indep_impl(std::span<const int> s) const {
  return cover_matching(s).has_value();
}

LaminarMatroid::LaminarMatroid(LaminarFamily family)
    : Matroid(family.ground_size()), family_(std::move(family)) {
  detect_loops();
}

bool LaminarMatroid::indep_impl(std::span<const int> s) const {
  std::vector<int> count(family_.node_count(), 0);
  for (int e : s) {
    for (int id : family_.members_containing(e)) {
      if (++count[id] > family_.node(id).cap) return false;
    }
  }
  return true;
}

RestrictionMatroid::RestrictionMatroid(MatroidPtr inner, ElementSet subset)
    : Matroid(inner ? inner->ground_size() : 0), inner_(std::move(inner)) {
  if (!inner_) throw malformed_input("restriction: null inner matroid");
  ElementSet canon = to_canonical_set(subset);
  if (canon.size() != subset.size()) {
    throw malformed_input("restriction: duplicate element in subset");
  }
  if (!is_subset(canon, inner_->domain())) {
    throw malformed_input("restriction: subset not within inner ground set");
  }
  set_domain(std::move(canon));
  detect_loops();
}

bool RestrictionMatroid::indep_impl(std::span<const int> s) const {
  return inner_->is_independent(s);
}

TruncationMatroid::TruncationMatroid(MatroidPtr inner, int bound)
    : Matroid(inner ? inner->ground_size() : 0),
      inner_(std::move(inner)),
      bound_(bound) {
  if (!inner_) throw malformed_input("truncation: null inner matroid");
  if (bound < 1) throw malformed_input("truncation: bound must be >= 1");
  set_domain(inner_->domain());
  detect_loops();
}

bool TruncationMatroid::indep_impl(std::span<const int> s) const {
  return static_cast<int>(s.size()) <= bound_ && inner_->is_independent(s);
}

MatroidPtr restrict_to(MatroidPtr m, ElementSet subset) {
  return std::make_shared<RestrictionMatroid>(std::move(m), std::move(subset));
}

MatroidPtr truncate(MatroidPtr m, int bound) {
  return std::make_shared<TruncationMatroid>(std::move(m), bound);
}

bool check_matroid_axioms(const Matroid& m) {
  const ElementSet& ground = m.domain();
  const int n = static_cast<int>(ground.size());
  if (n > 16) {
    throw budget_exceeded("check_matroid_axioms: ground set of size " +
                          std::to_string(n) + " exceeds the limit of 16");
  }
  const std::uint32_t full = 1u << n;

  std::vector<char> indep(full, 0);
  ElementSet buf;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    buf.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) buf.push_back(ground[i]);
    }
    indep[mask] = m.is_independent(buf) ? 1 : 0;
  }

  if (!indep[0]) return false;

  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!indep[mask]) continue;
    for (int i = 0; i < n; ++i) {
      if ((mask & (1u << i)) && !indep[mask ^ (1u << i)]) return false;
    }
  }

  // augment[y] = elements x outside y with y + x independent; the exchange
  // axiom for |X| = |Y| + 1 implies the general case by downward closure.
  std::vector<std::uint32_t> augment(full, 0);
  for (std::uint32_t y = 0; y < full; ++y) {
    if (!indep[y]) continue;
    for (int i = 0; i < n; ++i) {
      if (!(y & (1u << i)) && indep[y | (1u << i)]) augment[y] |= 1u << i;
    }
  }
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (indep[mask]) by_size[std::popcount(mask)].push_back(mask);
  }
  for (int s = 0; s + 1 <= n; ++s) {
    for (std::uint32_t y : by_size[s]) {
      for (std::uint32_t x : by_size[s + 1]) {
        if ((x & ~y & augment[y]) == 0) return false;
      }
    }
  }
  return true;
}

}  // namespace matkern
