#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lstree/density.hpp"
#include "lstree/level_set_tree.hpp"
#include "lstree/neighbor_graph.hpp"

namespace lstree {

enum class GridMode { mass, levels };

/// Ascending density thresholds. background_sets[j] holds the observations
/// with levels[j] <= f̂ < levels[j+1] (the last set is open above): the points
/// that leave the upper level set once the threshold rises past levels[j].
/// levels[0] is always min f̂, so the sets partition all n observations and
/// the sets before level t together hold exactly {i : f̂(x_i) < t}.
struct LevelGrid {
  std::vector<double> levels;
  std::vector<std::vector<index_t>> background_sets;
};

/// n_grid absent: one level per distinct f̂ value.
/// mass: levels at sorted positions 0, b, 2b, ... with b = ceil(n / n_grid).
/// levels: n_grid evenly spaced values on [min f̂, max f̂].
/// Duplicate levels collapse, so tied densities always share a background set.
LevelGrid construct_level_grid(const DensityVector& fhat, GridMode mode,
                               std::optional<std::size_t> n_grid = std::nullopt);

/// Level set tree of the kNN graph over the grid, via a single descending
/// union-find pass. Node ids follow birth order, so a child id exceeds its
/// parent's. A graph that is disconnected at the lowest level gets a virtual
/// root spanning all points with lambda1 == lambda2 == levels[0].
LevelSetTree construct_tree(const NeighborGraph& graph, const LevelGrid& grid,
                            const DensityVector& fhat);

/// Literal per-level component search (independent BFS for every grid level).
/// Reference implementation for testing construct_tree.
LevelSetTree brute_force_tree(const NeighborGraph& graph, const LevelGrid& grid,
                              const DensityVector& fhat);

/// Size-merge pruning: leaves smaller than gamma fold into their parent and
/// single-child chains are spliced, until every leaf has size >= gamma.
/// Clears the kappa scale; recompute it with compute_kappa.
LevelSetTree prune_size_merge(const LevelSetTree& tree, std::size_t gamma);

}  // namespace lstree
