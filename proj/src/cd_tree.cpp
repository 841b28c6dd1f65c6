#include "lstree/cd_tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "lstree/detail/filtration_sweep.hpp"
#include "lstree/detail/prune.hpp"
#include "lstree/errors.hpp"
#include "lstree/neighbor_graph.hpp"

namespace lstree {
namespace {

constexpr const char* kModule = "cd_tree";

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw data_error(kModule, "alpha must be a positive finite number");
  }
}

std::vector<double> grid_from_lengths(const std::vector<double>& lengths, double alpha) {
  std::vector<double> grid;
  grid.reserve(2 * lengths.size());
  for (double e : lengths) {
    grid.push_back(e);
    grid.push_back(e / alpha);
  }
  std::sort(grid.begin(), grid.end(), std::greater<>());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

// Step index of an exact grid value (grid is strictly descending).
std::size_t grid_position(const std::vector<double>& grid, double value) {
  const auto it = std::lower_bound(grid.begin(), grid.end(), value, std::greater<>());
  if (it == grid.end() || *it != value) {
    throw data_error(kModule, "radius missing from grid");
  }
  return static_cast<std::size_t>(it - grid.begin());
}

CDTree sweep(const DistanceMatrix& distances, std::size_t k, double alpha, CDStart start) {
  check_alpha(alpha);
  const std::size_t n = distances.size();
  const KnnResult neighbors = knn(distances, k);

  std::vector<std::pair<index_t, index_t>> pairs;
  if (start == CDStart::exact) {
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
  } else {
    pairs = knn_graph(neighbors).edges();
  }
  std::vector<double> lengths;
  lengths.reserve(pairs.size());
  for (const auto& [u, v] : pairs) lengths.push_back(distances(u, v));
  const auto grid = grid_from_lengths(lengths, alpha);

  std::vector<std::size_t> vertex_last(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(neighbors.k_radius[i] > 0.0)) {
      throw data_error(kModule, "observation " + std::to_string(i) +
                                    " has a zero k-neighbor radius; remove duplicate points");
    }
    vertex_last[i] = grid_position(grid, neighbors.k_radius[i]);
  }
  std::vector<detail::SweepEdge> edges;
  edges.reserve(pairs.size());
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    edges.push_back({pairs[e].first, pairs[e].second, grid_position(grid, lengths[e] / alpha)});
  }
  const auto swept = detail::sweep_filtration(n, grid.size(), vertex_last, edges);

  CDTree tree;
  tree.n = n;
  tree.k = k;
  tree.alpha = alpha;
  tree.start = start;
  tree.k_radius = neighbors.k_radius;
  for (std::size_t i = 0; i < swept.size(); ++i) {
    const auto& s = swept[i];
    CDNode node;
    node.id = static_cast<int>(i);
    if (s.parent) node.parent = static_cast<int>(*s.parent);
    for (auto c : s.children) node.children.push_back(static_cast<int>(c));
    node.r1 = grid[s.birth];
    node.r2 = s.death < grid.size() ? grid[s.death] : 0.0;
    node.members = s.members;
    tree.nodes.emplace(node.id, std::move(node));
  }
  return tree;
}

}  // namespace

int CDTree::root_id() const {
  for (const auto& [id, node] : nodes) {
    if (!node.parent) return id;
  }
  throw data_error(kModule, "tree has no root");
}

const CDNode& CDTree::node(int id) const {
  const auto it = nodes.find(id);
  if (it == nodes.end()) throw data_error(kModule, "unknown node id " + std::to_string(id));
  return it->second;
}

std::vector<int> CDTree::leaves() const {
  std::vector<int> out;
  for (const auto& [id, node] : nodes) {
    if (node.is_leaf()) out.push_back(id);
  }
  return out;
}

std::vector<double> cd_radius_grid(const DistanceMatrix& distances, double alpha) {
  check_alpha(alpha);
  const std::size_t n = distances.size();
  std::vector<double> lengths;
  lengths.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) lengths.push_back(distances(i, j));
  }
  return grid_from_lengths(lengths, alpha);
}

CDTree cd_tree_exact(const DistanceMatrix& distances, std::size_t k, double alpha) {
  return sweep(distances, k, alpha, CDStart::exact);
}

CDTree cd_tree_exact(const PointMatrix& points, std::size_t k, double alpha) {
  return sweep(pairwise_distances(points), k, alpha, CDStart::exact);
}

CDTree cd_tree_knn_start(const DistanceMatrix& distances, std::size_t k, double alpha) {
  return sweep(distances, k, alpha, CDStart::knn);
}

CDTree cd_tree_knn_start(const PointMatrix& points, std::size_t k, double alpha) {
  return sweep(pairwise_distances(points), k, alpha, CDStart::knn);
}

CDTree prune_size_merge(const CDTree& tree, std::size_t gamma) {
  if (gamma >= tree.n) {
    throw data_error(kModule, "gamma (" + std::to_string(gamma) + ") must be below n (" +
                                  std::to_string(tree.n) + ")");
  }
  CDTree out = tree;
  detail::prune_size_merge_nodes(
      out.nodes, out.root_id(), gamma,
      [](CDNode& parent, const std::vector<CDNode>& removed) {
        for (const auto& r : removed) parent.r2 = std::min(parent.r2, r.r2);
      },
      [](CDNode& parent, const CDNode& child) { parent.r2 = child.r2; });
  return out;
}

}  // namespace lstree
