#include "matkern/instance.hpp"

#include <string>

#include "matkern/errors.hpp"

namespace matkern {

void Instance::validate() const {
  if (n < 1) throw malformed_input("instance: ground set must be non-empty");
  if (k < 1) throw malformed_input("instance: k must be >= 1");
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw malformed_input("instance: weights length must equal n");
  }
  if (matroids.empty()) throw malformed_input("instance: no matroids");
  for (const MatroidPtr& m : matroids) {
    if (!m) throw malformed_input("instance: null matroid");
    if (m->ground_size() != n ||
        m->domain().size() != static_cast<std::size_t>(n)) {
      throw malformed_input("instance: matroid ground set mismatch");
    }
  }
  if (kind == InstanceKind::matching) {
    if (!graph) throw malformed_input("instance: matching without a graph");
    if (matroids.size() != 1) {
      throw malformed_input("instance: matching takes exactly one matroid");
    }
    if (graph->edges.size() != static_cast<std::size_t>(n)) {
      throw malformed_input("instance: graph edge count must equal n");
    }
    for (const auto& [u, v] : graph->edges) {
      if (u < 0 || u >= graph->vertex_count || v < 0 ||
          v >= graph->vertex_count) {
        throw malformed_input("instance: edge endpoint out of range");
      }
      if (u == v) throw malformed_input("instance: self-loop edge");
    }
  } else if (graph) {
    throw malformed_input("instance: intersection instances take no graph");
  }
}

bool Instance::feasible(std::span<const int> s) const {
  if (kind == InstanceKind::matching && !is_matching(graph->edges, s)) {
    return false;
  }
  for (const MatroidPtr& m : matroids) {
    if (!m->is_independent(s)) return false;
  }
  return true;
}

MatchingInstance Instance::matching_view() const {
  if (kind != InstanceKind::matching) {
    throw malformed_input("instance: not a matching instance");
  }
  MatchingInstance mi;
  mi.vertex_count = graph->vertex_count;
  mi.edges = graph->edges;
  mi.matroid = matroids.front();
  mi.weights = weights;
  mi.k = k;
  return mi;
}

}  // namespace matkern
