#pragma once

// Component dendrogram of a shrinking graph filtration G_0 ⊇ G_1 ⊇ ... ⊇ G_{m-1}.
// Both the density-level tree and the Chaudhuri-Dasgupta radius tree reduce to
// this: a vertex or edge is present at steps [0, last] and absent afterwards.
// The dendrogram is built in one pass from the last step down with a
// union-find structure; merges read in reverse are the splits.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lstree/matrix.hpp"

namespace lstree::detail {

struct SweepEdge {
  index_t u = 0;
  index_t v = 0;
  std::size_t last = 0;  // clamped to the last step of both endpoints
};

struct SweepNode {
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::size_t birth = 0;  // first step at which the component exists as this node
  std::size_t death = 0;  // first step at which it has split or emptied; == steps if it survives
  std::vector<index_t> members;  // vertex set at birth, sorted
};

/// Nodes come back in canonical order: sorted by (birth, depth, smallest member),
/// so the root is nodes[0] and every child follows its parent. Every vertex must
/// be present at step 0. Multiple components at step 0 are gathered under a
/// virtual root with birth == death == 0.
std::vector<SweepNode> sweep_filtration(std::size_t n, std::size_t steps,
                                        std::span<const std::size_t> vertex_last,
                                        std::span<const SweepEdge> edges);

}  // namespace lstree::detail
