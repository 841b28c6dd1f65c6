#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with the same per-entry arithmetic, so the two agree bitwise for
// any thread count. The serial versions exist for tests and benchmarks.

#include <cstddef>
#include <span>

#include "lstree/matrix.hpp"

namespace lstree::kernels {

/// Fills out (n*n, row-major) with Euclidean distances between rows of points (n*d).
void euclidean_distances_parallel(std::span<const double> points, std::size_t n, std::size_t d,
                                  std::span<double> out);
void euclidean_distances_serial(std::span<const double> points, std::size_t n, std::size_t d,
                                std::span<double> out);

/// For each row of dist (n*n), writes the k nearest other indices to
/// neighbors (n*k), ordered by (distance, index), and the k-th distance to k_radius.
void knn_rows_parallel(std::span<const double> dist, std::size_t n, std::size_t k,
                       std::span<index_t> neighbors, std::span<double> k_radius);
void knn_rows_serial(std::span<const double> dist, std::size_t n, std::size_t k,
                     std::span<index_t> neighbors, std::span<double> k_radius);

/// Number of worker threads the parallel kernels will use.
int max_threads();

}  // namespace lstree::kernels
