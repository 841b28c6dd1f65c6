#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace lstree::detail {

// Union by size with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Joins the sets of a and b. Returns {surviving root, absorbed root}; both
  /// equal the common root when the sets were already joined.
  std::pair<std::size_t, std::size_t> unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return {a, a};
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return {a, b};
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace lstree::detail
