#include <algorithm>
#include <utility>
#include <vector>

#include "lstree/kernels.hpp"

namespace lstree::kernels {
namespace {

using Candidate = std::pair<double, index_t>;

// Selects the k nearest non-self entries of one row; ties resolve to the lower index.
void knn_row(std::span<const double> row, std::size_t self, std::size_t k,
             std::vector<Candidate>& scratch, index_t* neighbors, double* radius) {
  scratch.clear();
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != self) scratch.emplace_back(row[j], static_cast<index_t>(j));
  }
  const auto kth = scratch.begin() + static_cast<std::ptrdiff_t>(k);
  std::nth_element(scratch.begin(), kth - 1, scratch.end());
  std::sort(scratch.begin(), kth);
  for (std::size_t c = 0; c < k; ++c) neighbors[c] = scratch[c].second;
  *radius = scratch[k - 1].first;
}

}  // namespace

void knn_rows_parallel(std::span<const double> dist, std::size_t n, std::size_t k,
                       std::span<index_t> neighbors, std::span<double> k_radius) {
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    std::vector<Candidate> scratch;
    scratch.reserve(n);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
      const auto r = static_cast<std::size_t>(i);
      knn_row(dist.subspan(r * n, n), r, k, scratch, neighbors.data() + r * k, k_radius.data() + r);
    }
  }
}

void knn_rows_serial(std::span<const double> dist, std::size_t n, std::size_t k,
                     std::span<index_t> neighbors, std::span<double> k_radius) {
  std::vector<Candidate> scratch;
  scratch.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    knn_row(dist.subspan(i * n, n), i, k, scratch, neighbors.data() + i * k, k_radius.data() + i);
  }
}

}  // namespace lstree::kernels
