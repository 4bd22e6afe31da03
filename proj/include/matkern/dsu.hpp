#pragma once

#include <numeric>
#include <vector>

namespace matkern {

// Union-find with path halving; used for forest/connectivity tests.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    --components_;
    return true;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_;
};

}  // namespace matkern
