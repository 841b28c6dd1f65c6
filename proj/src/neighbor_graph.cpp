#include "lstree/neighbor_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lstree/errors.hpp"
#include "lstree/kernels.hpp"

namespace lstree {

DistanceMatrix pairwise_distances(const PointMatrix& points, Metric /*metric*/) {
  const std::size_t n = points.rows();
  std::vector<double> values(n * n);
  kernels::euclidean_distances_parallel(points.values(), n, points.cols(), values);
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw data_error("neighbor_graph", "distance overflowed to a non-finite value");
    }
  }
  return DistanceMatrix(n, std::move(values));
}

KnnResult knn(const DistanceMatrix& distances, std::size_t k) {
  const std::size_t n = distances.size();
  if (k < 1 || k > n - 1) {
    throw data_error("neighbor_graph", "k must lie in [1, " + std::to_string(n - 1) + "], got " +
                                           std::to_string(k));
  }
  KnnResult out;
  out.n = n;
  out.k = k;
  out.indices.resize(n * k);
  out.k_radius.resize(n);
  kernels::knn_rows_parallel(distances.values(), n, k, out.indices, out.k_radius);
  return out;
}

NeighborGraph knn_graph(const KnnResult& neighbors) {
  NeighborGraph g;
  g.n = neighbors.n;
  g.k = neighbors.k;
  g.k_radius = neighbors.k_radius;
  g.adjacency.resize(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (index_t j : neighbors.neighbors(i)) {
      if (j == i) continue;
      g.adjacency[i].push_back(j);
      g.adjacency[j].push_back(static_cast<index_t>(i));
    }
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

NeighborGraph knn_graph(const DistanceMatrix& distances, std::size_t k) {
  return knn_graph(knn(distances, k));
}

std::size_t NeighborGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& adj : adjacency) twice += adj.size();
  return twice / 2;
}

std::vector<std::pair<index_t, index_t>> NeighborGraph::edges() const {
  std::vector<std::pair<index_t, index_t>> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < n; ++i) {
    for (index_t j : adjacency[i]) {
      if (j > i) out.emplace_back(static_cast<index_t>(i), j);
    }
  }
  return out;
}

}  // namespace lstree
