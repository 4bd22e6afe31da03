#pragma once

#include <utility>
#include <vector>

#include "matkern/sets.hpp"

namespace matkern {

// A capacity-labelled laminar family over ground ids [0, n), stored as a
// rooted forest. Any two member sets are nested or disjoint; equal sets are
// merged at construction keeping the smaller capacity.
//
// A family is "normalized" (for a bound k) when it has a single root covering
// the whole ground set, every singleton is present with capacity 1, no
// capacity exceeds k, and capacities never decrease from child to parent.
class LaminarFamily {
 public:
  struct Node {
    ElementSet elements;        // sorted
    int cap = 0;
    int parent = -1;            // -1 for roots
    std::vector<int> children;  // sorted by min element
  };

  // Validates laminarity; throws malformed_input on overlap, empty sets,
  // out-of-range ids, or negative caps.
  LaminarFamily(int ground_size,
                std::vector<std::pair<ElementSet, int>> sets_with_caps);

  int ground_size() const { return ground_size_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<int>& roots() const { return roots_; }

  // Node ids of all members containing the element, outermost first.
  const std::vector<int>& members_containing(int element) const {
    return containing_[element];
  }

  bool is_normalized() const { return normalized_; }
  // The unique root node (normalized families only).
  int root() const { return roots_.front(); }
  // Leaf (singleton) node of an element, -1 if absent.
  int leaf_of(int element) const { return leaf_of_[element]; }

  // Structural equality: same ground size and same (set, cap) members.
  bool operator==(const LaminarFamily& other) const {
    if (ground_size_ != other.ground_size_ ||
        nodes_.size() != other.nodes_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].elements != other.nodes_[i].elements ||
          nodes_[i].cap != other.nodes_[i].cap) {
        return false;
      }
    }
    return true;
  }

 private:
  friend LaminarFamily normalize_laminar(const LaminarFamily& family, int k);

  int ground_size_;
  std::vector<Node> nodes_;
  std::vector<int> roots_;
  std::vector<std::vector<int>> containing_;  // element -> node ids, outer first
  std::vector<int> leaf_of_;
  bool normalized_ = false;
};

}  // namespace matkern
