#pragma once

#include <algorithm>
#include <iterator>
#include <span>
#include <vector>

namespace matkern {

// Element sets are sorted vectors of distinct non-negative ids.
using ElementSet = std::vector<int>;

inline bool is_canonical_set(std::span<const int> s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] >= s[i + 1]) return false;
  }
  return s.empty() || s.front() >= 0;
}

inline ElementSet to_canonical_set(std::span<const int> s) {
  ElementSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool set_contains(std::span<const int> sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline bool is_subset(std::span<const int> a, std::span<const int> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElementSet set_union(std::span<const int> a, std::span<const int> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline ElementSet set_intersection(std::span<const int> a,
                                   std::span<const int> b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline ElementSet set_difference(std::span<const int> a,
                                 std::span<const int> b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline ElementSet set_insert(std::span<const int> a, int x) {
  ElementSet out;
  out.reserve(a.size() + 1);
  auto it = std::lower_bound(a.begin(), a.end(), x);
  out.insert(out.end(), a.begin(), it);
  if (it == a.end() || *it != x) out.push_back(x);
  out.insert(out.end(), it, a.end());
  return out;
}

inline ElementSet set_erase(std::span<const int> a, int x) {
  ElementSet out;
  out.reserve(a.size());
  for (int e : a) {
    if (e != x) out.push_back(e);
  }
  return out;
}

}  // namespace matkern
