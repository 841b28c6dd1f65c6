#include "lstree/detail/filtration_sweep.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "lstree/detail/disjoint_sets.hpp"

namespace lstree::detail {

std::vector<SweepNode> sweep_filtration(std::size_t n, std::size_t steps,
                                        std::span<const std::size_t> vertex_last,
                                        std::span<const SweepEdge> edges) {
  if (steps == 0 || n == 0) throw std::invalid_argument("sweep_filtration: empty filtration");
  if (vertex_last.size() != n) throw std::invalid_argument("sweep_filtration: vertex count mismatch");

  std::vector<std::vector<index_t>> vertex_bucket(steps);
  for (std::size_t v = 0; v < n; ++v) {
    if (vertex_last[v] >= steps) throw std::invalid_argument("sweep_filtration: step out of range");
    vertex_bucket[vertex_last[v]].push_back(static_cast<index_t>(v));
  }
  std::vector<std::vector<std::pair<index_t, index_t>>> edge_bucket(steps);
  for (const auto& e : edges) {
    const auto last = std::min({e.last, vertex_last[e.u], vertex_last[e.v]});
    edge_bucket[last].emplace_back(e.u, e.v);
  }

  DisjointSets sets(n);
  std::vector<std::vector<std::size_t>> comp_nodes(n);  // keyed by union-find root
  std::vector<std::size_t> home(n);
  std::vector<std::size_t> stamp(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> touched;
  std::vector<SweepNode> nodes;

  for (std::size_t s = steps; s-- > 0;) {
    touched.clear();
    for (index_t v : vertex_bucket[s]) touched.push_back(v);
    for (const auto& [u, v] : edge_bucket[s]) {
      const auto [root, absorbed] = sets.unite(u, v);
      if (root == absorbed) continue;
      auto& into = comp_nodes[root];
      auto& from = comp_nodes[absorbed];
      if (into.size() < from.size()) into.swap(from);
      into.insert(into.end(), from.begin(), from.end());
      from.clear();
      from.shrink_to_fit();
      touched.push_back(root);
    }

    for (std::size_t t : touched) {
      const std::size_t r = sets.find(t);
      if (stamp[r] == s) continue;
      stamp[r] = s;
      auto& list = comp_nodes[r];
      if (list.size() == 1) continue;
      SweepNode node;
      node.death = s + 1;
      const std::size_t id = nodes.size();
      for (std::size_t c : list) {
        nodes[c].birth = s + 1;
        nodes[c].parent = id;
        node.children.push_back(c);
      }
      nodes.push_back(std::move(node));
      list.assign(1, id);
    }
    for (index_t v : vertex_bucket[s]) home[v] = comp_nodes[sets.find(v)].front();
  }

  std::vector<std::size_t> tops;
  for (std::size_t v = 0; v < n; ++v) {
    if (sets.find(v) == v) tops.push_back(comp_nodes[v].front());
  }
  for (std::size_t t : tops) nodes[t].birth = 0;
  if (tops.size() > 1) {
    SweepNode virtual_root;
    virtual_root.birth = 0;
    virtual_root.death = 0;
    const std::size_t id = nodes.size();
    for (std::size_t t : tops) {
      nodes[t].parent = id;
      virtual_root.children.push_back(t);
    }
    nodes.push_back(std::move(virtual_root));
  }

  // Parents are always created after their children, so one forward pass
  // accumulates every subtree's vertices into its ancestors.
  for (std::size_t v = 0; v < n; ++v) nodes[home[v]].members.push_back(static_cast<index_t>(v));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].parent) {
      auto& parent_members = nodes[*nodes[i].parent].members;
      parent_members.insert(parent_members.end(), nodes[i].members.begin(), nodes[i].members.end());
    }
  }
  for (auto& node : nodes) std::sort(node.members.begin(), node.members.end());

  std::vector<std::size_t> depth(nodes.size(), 0);
  for (std::size_t i = nodes.size(); i-- > 0;) {
    if (nodes[i].parent) depth[i] = depth[*nodes[i].parent] + 1;
  }
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(nodes[a].birth, depth[a], nodes[a].members.front()) <
           std::tuple(nodes[b].birth, depth[b], nodes[b].members.front());
  });
  std::vector<std::size_t> rank(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::vector<SweepNode> sorted;
  sorted.reserve(nodes.size());
  for (std::size_t i : order) {
    SweepNode node = std::move(nodes[i]);
    if (node.parent) node.parent = rank[*node.parent];
    for (auto& c : node.children) c = rank[c];
    std::sort(node.children.begin(), node.children.end());
    sorted.push_back(std::move(node));
  }
  return sorted;
}

}  // namespace lstree::detail
