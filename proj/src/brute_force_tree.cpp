// Literal per-level component search. Deliberately shares no code with the
// union-find construction it is used to check.

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <tuple>

#include "lstree/errors.hpp"
#include "lstree/tree_builder.hpp"

namespace lstree {
namespace {

constexpr const char* kModule = "tree_builder";

// Connected components of the subgraph induced by {i : fhat_i >= level}.
// label[i] = component index or -1; components ordered by smallest vertex.
std::vector<std::vector<index_t>> components_at(const NeighborGraph& graph,
                                                const std::vector<double>& fhat, double level,
                                                std::vector<int>& label) {
  const std::size_t n = fhat.size();
  label.assign(n, -1);
  std::vector<std::vector<index_t>> comps;
  for (std::size_t start = 0; start < n; ++start) {
    if (fhat[start] < level || label[start] != -1) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::deque<index_t> queue{static_cast<index_t>(start)};
    label[start] = id;
    while (!queue.empty()) {
      const index_t v = queue.front();
      queue.pop_front();
      comps.back().push_back(v);
      for (index_t w : graph.adjacency[v]) {
        if (fhat[w] >= level && label[w] == -1) {
          label[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

double mass_below(const std::vector<double>& fhat, double level) {
  std::size_t count = 0;
  for (double f : fhat) {
    if (f < level) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(fhat.size());
}

// Ids in creation order group new nodes by parent; the published order is
// (lambda1, depth, smallest member).
LevelSetTree renumber(LevelSetTree tree) {
  std::map<int, std::size_t> depth;
  for (const auto& [id, node] : tree.nodes) depth[id] = node.parent ? depth.at(*node.parent) + 1 : 0;
  std::vector<int> order;
  for (const auto& [id, node] : tree.nodes) order.push_back(id);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = tree.nodes.at(a);
    const auto& y = tree.nodes.at(b);
    return std::tuple(x.lambda1, depth.at(a), x.members.front()) <
           std::tuple(y.lambda1, depth.at(b), y.members.front());
  });
  std::map<int, int> new_id;
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);

  std::map<int, TreeNode> nodes;
  for (auto& [id, node] : tree.nodes) {
    node.id = new_id.at(id);
    if (node.parent) node.parent = new_id.at(*node.parent);
    for (int& c : node.children) c = new_id.at(c);
    std::sort(node.children.begin(), node.children.end());
    nodes.emplace(node.id, std::move(node));
  }
  tree.nodes = std::move(nodes);
  return tree;
}

}  // namespace

LevelSetTree brute_force_tree(const NeighborGraph& graph, const LevelGrid& grid,
                              const DensityVector& fhat) {
  const auto& f = fhat.values;
  const auto& levels = grid.levels;
  const std::size_t n = f.size();
  if (graph.n != n) throw data_error(kModule, "graph and density cover different point counts");
  if (levels.empty()) throw data_error(kModule, "empty level grid");
  const double f_min = *std::min_element(f.begin(), f.end());
  const double f_max = *std::max_element(f.begin(), f.end());
  if (levels.front() > f_min) {
    throw data_error(kModule, "lowest grid level exceeds min density; the root would not span all points");
  }
  if (levels.back() > f_max) {
    throw data_error(kModule, "grid level above max density gives an empty upper level set");
  }

  LevelSetTree tree;
  tree.n = n;
  tree.sorted_density = f;
  std::sort(tree.sorted_density.begin(), tree.sorted_density.end());

  auto add_node = [&](std::optional<int> parent, double lambda1, std::vector<index_t> members) {
    TreeNode node;
    node.id = static_cast<int>(tree.nodes.size());
    node.parent = parent;
    node.lambda1 = lambda1;
    node.members = std::move(members);
    if (parent) tree.nodes.at(*parent).children.push_back(node.id);
    const int id = node.id;
    tree.nodes.emplace(id, std::move(node));
    return id;
  };

  // active[c] = node currently represented by component c of the previous level
  std::vector<int> prev_label;
  auto comps = components_at(graph, f, levels[0], prev_label);
  std::vector<int> active;
  if (comps.size() == 1) {
    active.push_back(add_node(std::nullopt, levels[0], comps[0]));
  } else {
    std::vector<index_t> everyone(n);
    for (std::size_t i = 0; i < n; ++i) everyone[i] = static_cast<index_t>(i);
    const int root = add_node(std::nullopt, levels[0], everyone);
    tree.nodes.at(root).lambda2 = levels[0];
    for (auto& c : comps) active.push_back(add_node(root, levels[0], c));
  }

  for (std::size_t j = 1; j < levels.size(); ++j) {
    std::vector<int> label;
    auto next = components_at(graph, f, levels[j], label);
    std::vector<std::vector<std::size_t>> pieces(active.size());
    for (std::size_t c = 0; c < next.size(); ++c) {
      pieces[static_cast<std::size_t>(prev_label[next[c].front()])].push_back(c);
    }
    std::vector<int> next_active(next.size(), -1);
    for (std::size_t a = 0; a < active.size(); ++a) {
      if (pieces[a].empty()) {
        tree.nodes.at(active[a]).lambda2 = levels[j];
      } else if (pieces[a].size() == 1) {
        next_active[pieces[a].front()] = active[a];
      } else {
        tree.nodes.at(active[a]).lambda2 = levels[j];
        for (std::size_t c : pieces[a]) next_active[c] = add_node(active[a], levels[j], next[c]);
      }
    }
    active = std::move(next_active);
    prev_label = std::move(label);
  }
  const double past_top = std::nextafter(f_max, std::numeric_limits<double>::infinity());
  for (int id : active) tree.nodes.at(id).lambda2 = past_top;

  for (auto& [id, node] : tree.nodes) {
    node.alpha1 = mass_below(f, node.lambda1);
    node.alpha2 = mass_below(f, node.lambda2);
  }
  return renumber(std::move(tree));
}

}  // namespace lstree
