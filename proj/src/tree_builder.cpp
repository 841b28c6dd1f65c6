#include "lstree/tree_builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lstree/detail/filtration_sweep.hpp"
#include "lstree/detail/prune.hpp"
#include "lstree/errors.hpp"
#include "lstree/scales.hpp"

namespace lstree {
namespace {

constexpr const char* kModule = "tree_builder";

void check_grid(const LevelGrid& grid, const DensityVector& fhat) {
  const auto& levels = grid.levels;
  if (levels.empty()) throw data_error(kModule, "empty level grid");
  if (grid.background_sets.size() != levels.size()) {
    throw data_error(kModule, "background sets do not match the level grid");
  }
  for (std::size_t j = 1; j < levels.size(); ++j) {
    if (!(levels[j - 1] < levels[j])) throw data_error(kModule, "grid levels must strictly increase");
  }
  const auto [lo, hi] = std::minmax_element(fhat.values.begin(), fhat.values.end());
  if (levels.front() > *lo) {
    throw data_error(kModule, "lowest grid level exceeds min density; the root would not span all points");
  }
  if (levels.back() > *hi) {
    throw data_error(kModule, "grid level above max density gives an empty upper level set");
  }
}

}  // namespace

int LevelSetTree::root_id() const {
  for (const auto& [id, node] : nodes) {
    if (!node.parent) return id;
  }
  throw data_error(kModule, "tree has no root");
}

const TreeNode& LevelSetTree::node(int id) const {
  const auto it = nodes.find(id);
  if (it == nodes.end()) throw data_error(kModule, "unknown node id " + std::to_string(id));
  return it->second;
}

std::vector<int> LevelSetTree::leaves() const {
  std::vector<int> out;
  for (const auto& [id, node] : nodes) {
    if (node.is_leaf()) out.push_back(id);
  }
  return out;
}

LevelGrid construct_level_grid(const DensityVector& fhat, GridMode mode,
                               std::optional<std::size_t> n_grid) {
  const std::size_t n = fhat.values.size();
  if (n == 0) throw data_error(kModule, "empty density vector");
  if (n_grid && (*n_grid < 2 || *n_grid > n)) {
    throw data_error(kModule, "n_grid must lie in [2, " + std::to_string(n) + "], got " +
                                  std::to_string(*n_grid));
  }
  std::vector<double> sorted = fhat.values;
  std::sort(sorted.begin(), sorted.end());

  LevelGrid grid;
  if (!n_grid) {
    grid.levels = sorted;
  } else if (mode == GridMode::mass) {
    const std::size_t block = (n + *n_grid - 1) / *n_grid;
    for (std::size_t pos = 0; pos < n; pos += block) grid.levels.push_back(sorted[pos]);
  } else {
    const double lo = sorted.front();
    const double hi = sorted.back();
    const std::size_t g = *n_grid;
    for (std::size_t j = 0; j + 1 < g; ++j) {
      grid.levels.push_back(lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(g - 1));
    }
    grid.levels.push_back(hi);
  }
  grid.levels.erase(std::unique(grid.levels.begin(), grid.levels.end()), grid.levels.end());

  grid.background_sets.resize(grid.levels.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::upper_bound(grid.levels.begin(), grid.levels.end(), fhat.values[i]);
    const auto j = static_cast<std::size_t>(it - grid.levels.begin()) - 1;
    grid.background_sets[j].push_back(static_cast<index_t>(i));
  }
  return grid;
}

LevelSetTree construct_tree(const NeighborGraph& graph, const LevelGrid& grid,
                            const DensityVector& fhat) {
  const std::size_t n = fhat.values.size();
  if (graph.n != n) throw data_error(kModule, "graph and density cover different point counts");
  check_grid(grid, fhat);
  const std::size_t steps = grid.levels.size();

  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> vertex_last(n, unset);
  for (std::size_t j = 0; j < steps; ++j) {
    const double upper = j + 1 < steps ? grid.levels[j + 1] : std::numeric_limits<double>::infinity();
    for (index_t i : grid.background_sets[j]) {
      if (i >= n || vertex_last[i] != unset) {
        throw data_error(kModule, "background sets do not partition the observations");
      }
      if (fhat.values[i] < grid.levels[j] || !(fhat.values[i] < upper)) {
        throw data_error(kModule, "observation " + std::to_string(i) +
                                      " is in the wrong background set for its density");
      }
      vertex_last[i] = j;
    }
  }
  if (std::ranges::find(vertex_last, unset) != vertex_last.end()) {
    throw data_error(kModule, "background sets do not cover every observation");
  }

  std::vector<detail::SweepEdge> edges;
  for (const auto& [u, v] : graph.edges()) {
    edges.push_back({u, v, std::min(vertex_last[u], vertex_last[v])});
  }
  const auto swept = detail::sweep_filtration(n, steps, vertex_last, edges);

  LevelSetTree tree;
  tree.n = n;
  tree.sorted_density = fhat.values;
  std::sort(tree.sorted_density.begin(), tree.sorted_density.end());
  const double past_top =
      std::nextafter(tree.sorted_density.back(), std::numeric_limits<double>::infinity());

  for (std::size_t i = 0; i < swept.size(); ++i) {
    const auto& s = swept[i];
    TreeNode node;
    node.id = static_cast<int>(i);
    if (s.parent) node.parent = static_cast<int>(*s.parent);
    for (auto c : s.children) node.children.push_back(static_cast<int>(c));
    node.lambda1 = grid.levels[s.birth];
    node.lambda2 = s.death < steps ? grid.levels[s.death] : past_top;
    node.alpha1 = alpha_of_lambda(tree, node.lambda1);
    node.alpha2 = alpha_of_lambda(tree, node.lambda2);
    node.members = s.members;
    tree.nodes.emplace(node.id, std::move(node));
  }
  return tree;
}

LevelSetTree prune_size_merge(const LevelSetTree& tree, std::size_t gamma) {
  if (gamma >= tree.n) {
    throw data_error(kModule, "gamma (" + std::to_string(gamma) + ") must be below n (" +
                                  std::to_string(tree.n) + ")");
  }
  LevelSetTree out = tree;
  out.has_kappa = false;
  for (auto& [id, node] : out.nodes) {
    node.kappa1 = 0.0;
    node.kappa2 = 0.0;
  }
  detail::prune_size_merge_nodes(
      out.nodes, out.root_id(), gamma,
      [](TreeNode& parent, const std::vector<TreeNode>& removed) {
        for (const auto& r : removed) {
          if (r.lambda2 > parent.lambda2) {
            parent.lambda2 = r.lambda2;
            parent.alpha2 = r.alpha2;
          }
        }
      },
      [](TreeNode& parent, const TreeNode& child) {
        parent.lambda2 = child.lambda2;
        parent.alpha2 = child.alpha2;
      });
  return out;
}

}  // namespace lstree
