#include "matkern/generate.hpp"

#include <algorithm>
#include <cmath>

#include "matkern/errors.hpp"
#include "matkern/rng.hpp"

namespace matkern {

namespace {

Weights random_weights(const GenParams& p, Rng& rng) {
  if (p.weight_min > p.weight_max) {
    throw malformed_input("generate: weight_min > weight_max");
  }
  Weights w(p.n);
  for (auto& x : w) {
    x = p.weight_min + rng.below(p.weight_max - p.weight_min + 1);
  }
  return w;
}

MatroidPtr random_simple_partition(int n, int k, Rng& rng) {
  const int target = std::max(1, std::min(n, k + 1 + static_cast<int>(
                                                         rng.below(4))));
  std::vector<ElementSet> raw(target);
  for (int e = 0; e < n; ++e) {
    raw[rng.below(static_cast<std::uint64_t>(target))].push_back(e);
  }
  std::vector<ElementSet> blocks;
  for (auto& b : raw) {
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  std::vector<int> caps(blocks.size(), 1);
  return std::make_shared<PartitionMatroid>(n, std::move(blocks),
                                            std::move(caps));
}

std::vector<std::pair<int, int>> random_multigraph_edges(int n, int v,
                                                         Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int e = 0; e < n; ++e) {
    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(v - 1)));
    if (b >= a) ++b;  // no self-loops
    edges.emplace_back(a, b);
  }
  return edges;
}

MatroidPtr random_arbitrary(int n, int k, Rng& rng) {
  switch (rng.below(3)) {
    case 0: {
      const int rank =
          std::max(1, std::min(n, k + static_cast<int>(rng.below(3))));
      return std::make_shared<UniformMatroid>(n, rank);
    }
    case 1: {
      const int v = std::max(k + 2, static_cast<int>(std::sqrt(2.0 * n)) + 1);
      return std::make_shared<GraphicMatroid>(
          v, random_multigraph_edges(n, v, rng));
    }
    default: {
      const int target =
          std::max(1, std::min(n, k + 1 + static_cast<int>(rng.below(3))));
      std::vector<ElementSet> raw(target);
      for (int e = 0; e < n; ++e) {
        raw[rng.below(static_cast<std::uint64_t>(target))].push_back(e);
      }
      std::vector<ElementSet> blocks;
      std::vector<int> caps;
      for (auto& b : raw) {
        if (b.empty()) continue;
        blocks.push_back(std::move(b));
        caps.push_back(1 + static_cast<int>(rng.below(2)));
      }
      return std::make_shared<PartitionMatroid>(n, std::move(blocks),
                                                std::move(caps));
    }
  }
}

MatroidPtr random_transversal(int n, int k, int rights_hint, Rng& rng) {
  const int rights =
      rights_hint > 0 ? rights_hint : k + 2 + static_cast<int>(rng.below(3));
  std::vector<ElementSet> adjacency(n);
  for (int u = 0; u < n; ++u) {
    const int degree = 1 + static_cast<int>(rng.below(2));
    while (static_cast<int>(adjacency[u].size()) <
           std::min(degree, rights)) {
      int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(rights)));
      if (!set_contains(adjacency[u], w)) {
        adjacency[u] = set_insert(adjacency[u], w);
      }
    }
  }
  return std::make_shared<TransversalMatroid>(std::move(adjacency), rights);
}

void split_range(std::vector<std::pair<ElementSet, int>>& sets, int lo, int hi,
                 int depth, int k, Rng& rng) {
  if (depth <= 0 || hi - lo < 2) return;
  const int chunks =
      std::min(hi - lo, 2 + static_cast<int>(rng.below(3)));  // 2..4
  std::vector<int> cuts{lo};
  for (int c = 1; c < chunks; ++c) {
    cuts.push_back(lo + 1 +
                   static_cast<int>(rng.below(
                       static_cast<std::uint64_t>(hi - lo - 1))));
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const int a = cuts[c];
    const int b = cuts[c + 1];
    if (b - a < 1) continue;
    ElementSet members(b - a);
    for (int e = a; e < b; ++e) members[e - a] = e;
    const int cap =
        1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                std::max(1, std::min(k, b - a)))));
    sets.emplace_back(std::move(members), std::min(cap, k));
    split_range(sets, a, b, depth - 1, k, rng);
  }
}

MatroidPtr random_laminar(int n, int k, int depth, Rng& rng) {
  std::vector<std::pair<ElementSet, int>> sets;
  split_range(sets, 0, n, std::max(1, depth - 1), k, rng);
  return std::make_shared<LaminarMatroid>(LaminarFamily(n, std::move(sets)));
}

}  // namespace

Instance generate(const std::string& kind, const GenParams& params,
                  std::uint64_t seed) {
  if (params.n < 1) throw malformed_input("generate: n must be >= 1");
  if (params.k < 1) throw malformed_input("generate: k must be >= 1");

  Instance instance;
  instance.n = params.n;
  instance.k = params.k;

  const bool matching = kind == "matching" || kind == "rainbow";
  if (!matching && params.d < 2) {
    throw malformed_input("generate: d must be >= 2 for intersection kinds");
  }

  Rng rng(derive_seed(seed, {0xa11ce}));
  instance.weights = random_weights(params, rng);
  const int n = params.n;
  const int k = params.k;

  if (matching) {
    instance.kind = InstanceKind::matching;
    GraphSpec graph;
    graph.vertex_count =
        params.vertices > 0 ? params.vertices : std::max(2 * k + 2, n / 2 + 2);
    graph.edges = random_multigraph_edges(n, graph.vertex_count, rng);
    instance.graph = std::move(graph);
    const int colors =
        params.colors > 0 ? params.colors : k + 1 + static_cast<int>(
                                                        rng.below(3));
    std::vector<ElementSet> raw(colors);
    for (int e = 0; e < n; ++e) {
      raw[rng.below(static_cast<std::uint64_t>(colors))].push_back(e);
    }
    std::vector<ElementSet> blocks;
    for (auto& b : raw) {
      if (!b.empty()) blocks.push_back(std::move(b));
    }
    std::vector<int> caps(blocks.size(), 1);
    instance.matroids.push_back(std::make_shared<PartitionMatroid>(
        n, std::move(blocks), std::move(caps)));
  } else {
    instance.kind = InstanceKind::intersection;
    instance.matroids.push_back(random_arbitrary(n, k, rng));
    for (int i = 1; i < params.d; ++i) {
      if (kind == "partition") {
        instance.matroids.push_back(random_simple_partition(n, k, rng));
      } else if (kind == "coverable-graphic") {
        const int v = params.vertices > 0
                          ? params.vertices
                          : std::max(k + 2,
                                     static_cast<int>(std::sqrt(2.0 * n)) + 1);
        instance.matroids.push_back(std::make_shared<GraphicMatroid>(
            v, random_multigraph_edges(n, v, rng)));
      } else if (kind == "coverable-cographic") {
        // A cycle through all vertices plus chords: connected and bridgeless,
        // so the cographic matroid is loopless.
        const int v =
            params.vertices > 0
                ? params.vertices
                : std::max(3, std::min(n / 2 + 1, n - k + 1));
        if (v > n) {
          throw malformed_input(
              "generate: cographic needs n >= vertices (cycle edges)");
        }
        std::vector<std::pair<int, int>> edges;
        for (int i2 = 0; i2 < v; ++i2) edges.emplace_back(i2, (i2 + 1) % v);
        auto chords = random_multigraph_edges(n - v, v, rng);
        edges.insert(edges.end(), chords.begin(), chords.end());
        instance.matroids.push_back(
            std::make_shared<CographicMatroid>(v, std::move(edges)));
      } else if (kind == "transversal") {
        instance.matroids.push_back(
            random_transversal(n, k, params.right_vertices, rng));
      } else if (kind == "laminar") {
        instance.matroids.push_back(random_laminar(n, k, params.depth, rng));
      } else {
        throw malformed_input("generate: unknown kind '" + kind + "'");
      }
    }
  }

  instance.name = kind + "-n" + std::to_string(n) + "-d" +
                  std::to_string(matching ? 1 : params.d) + "-k" +
                  std::to_string(k) + "-s" + std::to_string(seed);
  instance.validate();
  return instance;
}

}  // namespace matkern
