#include "lstree/pipeline.hpp"

#include "lstree/neighbor_graph.hpp"
#include "lstree/scales.hpp"

namespace lstree {
namespace {

GeometricEstimate finish(const DistanceMatrix& distances, std::size_t d,
                         const GeometricOptions& options, bool pseudo) {
  const auto neighbors = knn(distances, options.k);
  const auto graph = knn_graph(neighbors);
  const std::size_t n = distances.size();
  GeometricEstimate out;
  out.fhat = pseudo ? knn_pseudo_density(neighbors.k_radius, n, options.k)
                    : knn_density(neighbors.k_radius, n, d, options.k);
  const auto grid = construct_level_grid(out.fhat, options.grid_mode, options.n_grid);
  out.tree = compute_kappa(prune_size_merge(construct_tree(graph, grid, out.fhat), options.gamma));
  return out;
}

}  // namespace

GeometricEstimate estimate_level_set_tree(const PointMatrix& points, const GeometricOptions& options) {
  return finish(pairwise_distances(points), points.cols(), options, options.pseudo);
}

GeometricEstimate estimate_level_set_tree(const DistanceMatrix& distances,
                                          const GeometricOptions& options) {
  return finish(distances, 1, options, true);
}

CDTree estimate_cd_tree(const DistanceMatrix& distances, const CDOptions& options) {
  auto tree = options.start == CDStart::exact
                  ? cd_tree_exact(distances, options.k, options.alpha)
                  : cd_tree_knn_start(distances, options.k, options.alpha);
  return prune_size_merge(tree, options.gamma);
}

}  // namespace lstree
