#pragma once

#include <cstddef>
#include <optional>

#include "lstree/cd_tree.hpp"
#include "lstree/density.hpp"
#include "lstree/level_set_tree.hpp"
#include "lstree/matrix.hpp"
#include "lstree/tree_builder.hpp"

namespace lstree {

struct GeometricOptions {
  std::size_t k = 10;
  std::size_t gamma = 0;
  GridMode grid_mode = GridMode::mass;
  std::optional<std::size_t> n_grid;
  bool pseudo = false;
};

struct GeometricEstimate {
  DensityVector fhat;
  LevelSetTree tree;  // pruned, all three scales populated
};

/// kNN graph, density, grid, tree, pruning and kappa in one call.
GeometricEstimate estimate_level_set_tree(const PointMatrix& points, const GeometricOptions& options);

/// Distance-only input always uses the pseudo-density.
GeometricEstimate estimate_level_set_tree(const DistanceMatrix& distances,
                                          const GeometricOptions& options);

struct CDOptions {
  std::size_t k = 5;
  std::size_t gamma = 0;
  double alpha = 1.4;
  CDStart start = CDStart::knn;
};

CDTree estimate_cd_tree(const DistanceMatrix& distances, const CDOptions& options);

}  // namespace lstree
