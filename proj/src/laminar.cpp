#include "matkern/laminar.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "matkern/errors.hpp"

namespace matkern {

namespace {

// Canonical node order: outer sets before inner ones, then by first element.
bool canonical_before(const ElementSet& a, const ElementSet& b) {
  if (a.front() != b.front()) return a.front() < b.front();
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

}  // namespace

LaminarFamily::LaminarFamily(
    int ground_size, std::vector<std::pair<ElementSet, int>> sets_with_caps)
    : ground_size_(ground_size) {
  if (ground_size < 0) throw malformed_input("laminar: negative ground size");

  // Merge duplicate sets keeping the tighter cap.
  std::map<ElementSet, int> merged;
  for (auto& [raw, cap] : sets_with_caps) {
    ElementSet set = to_canonical_set(raw);
    if (set.size() != raw.size()) {
      throw malformed_input("laminar: duplicate element inside a member set");
    }
    if (set.empty()) throw malformed_input("laminar: empty member set");
    if (set.front() < 0 || set.back() >= ground_size) {
      throw malformed_input("laminar: element id out of range");
    }
    if (cap < 0) throw malformed_input("laminar: negative capacity");
    auto [it, inserted] = merged.emplace(std::move(set), cap);
    if (!inserted) it->second = std::min(it->second, cap);
  }

  std::vector<std::pair<ElementSet, int>> sets(merged.begin(), merged.end());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const auto& a = sets[i].first;
      const auto& b = sets[j].first;
      ElementSet common = set_intersection(a, b);
      if (!common.empty() && common != a && common != b) {
        throw malformed_input("laminar: members neither nested nor disjoint");
      }
    }
  }

  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return canonical_before(a.first, b.first);
  });

  nodes_.reserve(sets.size());
  for (auto& [set, cap] : sets) {
    Node n;
    n.elements = std::move(set);
    n.cap = cap;
    nodes_.push_back(std::move(n));
  }

  // Parent = the innermost earlier superset. Insert in decreasing size so the
  // covering node per element is always the innermost superset seen so far.
  std::vector<int> order(nodes_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return nodes_[a].elements.size() > nodes_[b].elements.size();
  });
  std::vector<int> cover(ground_size_, -1);
  for (int id : order) {
    Node& n = nodes_[id];
    n.parent = cover[n.elements.front()];
    for (int e : n.elements) cover[e] = id;
  }
  for (int id = 0; id < node_count(); ++id) {
    if (nodes_[id].parent >= 0) {
      nodes_[nodes_[id].parent].children.push_back(id);
    } else {
      roots_.push_back(id);
    }
  }
  for (Node& n : nodes_) {
    std::sort(n.children.begin(), n.children.end(), [&](int a, int b) {
      return nodes_[a].elements.front() < nodes_[b].elements.front();
    });
  }
  std::sort(roots_.begin(), roots_.end(), [&](int a, int b) {
    return nodes_[a].elements.front() < nodes_[b].elements.front();
  });

  containing_.assign(ground_size_, {});
  leaf_of_.assign(ground_size_, -1);
  for (int id = 0; id < node_count(); ++id) {
    for (int e : nodes_[id].elements) containing_[e].push_back(id);
    if (nodes_[id].elements.size() == 1) leaf_of_[nodes_[id].elements[0]] = id;
  }
  // containing_ lists are outermost-first because nodes are built by size.
  for (auto& chain : containing_) {
    std::sort(chain.begin(), chain.end(), [&](int a, int b) {
      return nodes_[a].elements.size() > nodes_[b].elements.size();
    });
  }
}

}  // namespace matkern
