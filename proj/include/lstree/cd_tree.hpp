#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lstree/matrix.hpp"

namespace lstree {

enum class CDStart { exact, knn };

/// A cluster of the Chaudhuri-Dasgupta sweep. Radius shrinks as the tree
/// refines: the node exists for r in (r2, r1], so r1 >= r2.
struct CDNode {
  int id = 0;
  std::optional<int> parent;
  std::vector<int> children;
  double r1 = 0.0;
  double r2 = 0.0;
  std::vector<index_t> members;

  std::size_t size() const noexcept { return members.size(); }
  bool is_leaf() const noexcept { return children.empty(); }

  bool operator==(const CDNode&) const = default;
};

struct CDTree {
  std::map<int, CDNode> nodes;
  std::size_t n = 0;
  std::size_t k = 0;
  double alpha = 1.0;
  CDStart start = CDStart::exact;
  std::vector<double> k_radius;

  int root_id() const;
  const CDNode& node(int id) const;
  std::vector<int> leaves() const;

  bool operator==(const CDTree&) const = default;
};

/// Distinct values of {e_ij} ∪ {e_ij / alpha} over all pairs i < j, descending.
std::vector<double> cd_radius_grid(const DistanceMatrix& distances, double alpha);

/// Sweep over G_r = (vertices with r_k(x_i) <= r, edges with e_ij <= alpha * r)
/// as r decreases through the radius grid. The edge test is evaluated as
/// e_ij / alpha <= r so that grid values compare exactly.
/// Components alive at the smallest grid radius die at r2 = 0.
CDTree cd_tree_exact(const DistanceMatrix& distances, std::size_t k, double alpha);
CDTree cd_tree_exact(const PointMatrix& points, std::size_t k, double alpha);

/// Same sweep with the edge universe restricted to the symmetric kNN graph.
/// The radius grid is built from those edges only. With k = n - 1 this is
/// identical to cd_tree_exact.
CDTree cd_tree_knn_start(const DistanceMatrix& distances, std::size_t k, double alpha);
CDTree cd_tree_knn_start(const PointMatrix& points, std::size_t k, double alpha);

/// Size-merge pruning on radius intervals; an absorbing parent extends its
/// death down to the smallest removed r2.
CDTree prune_size_merge(const CDTree& tree, std::size_t gamma);

}  // namespace lstree
