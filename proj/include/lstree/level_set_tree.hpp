#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lstree/matrix.hpp"

namespace lstree {

/// One high-density cluster. It is active on the half-open density interval
/// [lambda1, lambda2): born at lambda1 and split or emptied at lambda2.
/// Nodes that survive the top grid level die just above max f̂, so their
/// alpha2 is exactly 1.
struct TreeNode {
  int id = 0;
  std::optional<int> parent;
  std::vector<int> children;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  std::vector<index_t> members;  // component at birth, sorted

  std::size_t size() const noexcept { return members.size(); }
  bool is_leaf() const noexcept { return children.empty(); }

  bool operator==(const TreeNode&) const = default;
};

struct LevelSetTree {
  std::map<int, TreeNode> nodes;
  std::size_t n = 0;
  std::vector<double> sorted_density;  // ascending f̂, backs the alpha scale
  bool has_kappa = false;

  int root_id() const;
  const TreeNode& node(int id) const;
  std::vector<int> leaves() const;  // ascending id

  bool operator==(const LevelSetTree&) const = default;
};

}  // namespace lstree
