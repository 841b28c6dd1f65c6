#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lstree/matrix.hpp"

namespace lstree {

enum class Metric { euclidean };

/// Exact pairwise distances. Output is bitwise identical for any thread count.
DistanceMatrix pairwise_distances(const PointMatrix& points, Metric metric = Metric::euclidean);

/// k nearest neighbors of every observation, self excluded.
struct KnnResult {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<index_t> indices;  // n*k, row i sorted by (distance, index)
  std::vector<double> k_radius;  // distance to the k-th neighbor

  std::span<const index_t> neighbors(std::size_t i) const {
    return {indices.data() + i * k, k};
  }
};

KnnResult knn(const DistanceMatrix& distances, std::size_t k);

/// Symmetric kNN similarity graph: {i, j} is an edge iff j is among the k
/// nearest neighbors of i or i is among those of j.
struct NeighborGraph {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::vector<index_t>> adjacency;  // sorted, no self-loops
  std::vector<double> k_radius;

  std::size_t edge_count() const;
  /// Each undirected edge once, as (lo, hi), in lexicographic order.
  std::vector<std::pair<index_t, index_t>> edges() const;
};

NeighborGraph knn_graph(const KnnResult& neighbors);

/// Convenience: knn() followed by knn_graph().
NeighborGraph knn_graph(const DistanceMatrix& distances, std::size_t k);

}  // namespace lstree
