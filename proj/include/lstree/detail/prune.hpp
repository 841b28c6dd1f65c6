#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace lstree::detail {

// Size-merge pruning over any node type with parent/children/members.
//   absorb(parent, removed): parent became a leaf after losing `removed`
//   splice(parent, child):   parent keeps its birth and members, takes the
//                            child's death; children are re-linked here
// All undersized leaves of a round are removed together, deepest parents first,
// so a parent never sees a half-processed child.
template <class Node, class Absorb, class Splice>
void prune_size_merge_nodes(std::map<int, Node>& nodes, int root, std::size_t gamma, Absorb absorb,
                            Splice splice) {
  while (true) {
    std::map<int, std::vector<int>, std::greater<>> small_by_parent;
    for (const auto& [id, node] : nodes) {
      if (id != root && node.children.empty() && node.members.size() < gamma) {
        small_by_parent[*node.parent].push_back(id);
      }
    }
    if (small_by_parent.empty()) return;

    for (const auto& [parent_id, removed_ids] : small_by_parent) {
      auto& parent = nodes.at(parent_id);
      std::vector<Node> removed;
      for (int id : removed_ids) {
        removed.push_back(std::move(nodes.at(id)));
        nodes.erase(id);
        std::erase(parent.children, id);
      }
      if (parent.children.empty()) {
        absorb(parent, removed);
      } else if (parent.children.size() == 1) {
        const int child_id = parent.children.front();
        Node child = std::move(nodes.at(child_id));
        nodes.erase(child_id);
        splice(parent, child);
        parent.children = child.children;
        for (int grandchild : parent.children) nodes.at(grandchild).parent = parent_id;
      }
    }
  }
}

}  // namespace lstree::detail
