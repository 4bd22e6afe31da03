#pragma once

// Shared test fixtures: naive re-implementations of the independence
// definitions (used as independent oracles), and exhaustive subset tables
// for exchange-property checks on small ground sets.

#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "matkern/instance.hpp"
#include "matkern/matroid.hpp"
#include "matkern/sets.hpp"

namespace support {

using matkern::ElementSet;
using matkern::Matroid;

// Raw set system given by an explicit list of sets; not necessarily a
// matroid. Lets the axiom checker see arbitrary families.
class ExplicitSetSystem : public Matroid {
 public:
  ExplicitSetSystem(int n, std::vector<ElementSet> independent) : Matroid(n) {
    for (auto& s : independent) family_.insert(matkern::to_canonical_set(s));
    detect_loops();
  }
  std::string class_name() const override { return "explicit"; }

 protected:
  bool indep_impl(std::span<const int> s) const override {
    return family_.count(ElementSet(s.begin(), s.end())) > 0;
  }

 private:
  std::set<ElementSet> family_;
};

// Forest test by component counting: every component of the selected
// subgraph must have exactly (vertices - 1) edges.
inline bool naive_forest(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges,
                         const ElementSet& s) {
  std::vector<std::vector<int>> adj(vertex_count);
  for (int e : s) {
    adj[edges[e].first].push_back(e);
    adj[edges[e].second].push_back(e);
  }
  std::vector<char> seen(vertex_count, 0);
  for (int start = 0; start < vertex_count; ++start) {
    if (seen[start] || adj[start].empty()) continue;
    int comp_vertices = 0;
    std::set<int> comp_edges;
    std::queue<int> queue;
    queue.push(start);
    seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      ++comp_vertices;
      for (int e : adj[v]) {
        comp_edges.insert(e);
        int other = edges[e].first == v ? edges[e].second : edges[e].first;
        if (!seen[other]) {
          seen[other] = 1;
          queue.push(other);
        }
      }
    }
    // Self-loops keep other == v; counted as an extra edge of the component.
    if (static_cast<int>(comp_edges.size()) != comp_vertices - 1) return false;
  }
  return true;
}

inline int count_components(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges,
                            const std::vector<char>& removed) {
  std::vector<std::vector<int>> adj(vertex_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (removed[e]) continue;
    adj[edges[e].first].push_back(edges[e].second);
    adj[edges[e].second].push_back(edges[e].first);
  }
  std::vector<char> seen(vertex_count, 0);
  int components = 0;
  for (int start = 0; start < vertex_count; ++start) {
    if (seen[start]) continue;
    ++components;
    std::queue<int> queue;
    queue.push(start);
    seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int u : adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push(u);
        }
      }
    }
  }
  return components;
}

inline bool naive_cographic(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges,
                            const ElementSet& s) {
  std::vector<char> none(edges.size(), 0);
  std::vector<char> removed(edges.size(), 0);
  for (int e : s) removed[e] = 1;
  return count_components(vertex_count, edges, none) ==
         count_components(vertex_count, edges, removed);
}

// Backtracking assignment of distinct right vertices.
inline bool naive_matchable(const std::vector<ElementSet>& adjacency,
                            const ElementSet& s, std::size_t idx = 0,
                            std::set<int> used = {}) {
  if (idx == s.size()) return true;
  for (int w : adjacency[s[idx]]) {
    if (used.count(w)) continue;
    used.insert(w);
    if (naive_matchable(adjacency, s, idx + 1, used)) return true;
    used.erase(w);
  }
  return false;
}

// rank by enumerating all subsets of s against an arbitrary oracle.
inline int naive_rank(const std::function<bool(const ElementSet&)>& indep,
                      const ElementSet& s) {
  const int m = static_cast<int>(s.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    ElementSet subset;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) subset.push_back(s[i]);
    }
    if (indep(subset)) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// span by its definition: rank(S + e) == rank(S).
inline ElementSet naive_span(const std::function<bool(const ElementSet&)>& indep,
                             const ElementSet& ground, const ElementSet& s) {
  const int base = naive_rank(indep, s);
  ElementSet out;
  for (int e : ground) {
    ElementSet extended = matkern::set_insert(s, e);
    if (naive_rank(indep, extended) == base) out.push_back(e);
  }
  return out;
}

// Exhaustive independence/rank tables over the domain of a small matroid.
struct IndepTable {
  ElementSet ground;
  std::vector<char> indep;
  std::vector<int> rank;

  static IndepTable build(const Matroid& m) {
    IndepTable t;
    t.ground = m.domain();
    const int n = static_cast<int>(t.ground.size());
    t.indep.assign(1u << n, 0);
    t.rank.assign(1u << n, 0);
    ElementSet buf;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      buf.clear();
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) buf.push_back(t.ground[i]);
      }
      t.indep[mask] = m.is_independent(buf) ? 1 : 0;
    }
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (t.indep[mask]) {
        t.rank[mask] = std::popcount(mask);
      } else {
        int best = 0;
        for (int i = 0; i < n; ++i) {
          if (mask & (1u << i)) {
            best = std::max(best, t.rank[mask ^ (1u << i)]);
          }
        }
        t.rank[mask] = best;
      }
    }
    return t;
  }

  int size() const { return static_cast<int>(ground.size()); }
  bool in_span(std::uint32_t mask, int pos) const {
    return rank[mask | (1u << pos)] == rank[mask];
  }
  ElementSet to_set(std::uint32_t mask) const {
    ElementSet out;
    for (int i = 0; i < size(); ++i) {
      if (mask & (1u << i)) out.push_back(ground[i]);
    }
    return out;
  }
};

inline ElementSet full_ground(int n) {
  ElementSet out(n);
  for (int e = 0; e < n; ++e) out[e] = e;
  return out;
}

}  // namespace support
