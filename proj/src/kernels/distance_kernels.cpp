#include <cmath>

#include "lstree/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lstree::kernels {
namespace {

inline double euclidean(const double* a, const double* b, std::size_t d) {
  double sum = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    const double diff = a[c] - b[c];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace

void euclidean_distances_parallel(std::span<const double> points, std::size_t n, std::size_t d,
                                  std::span<double> out) {
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const double* xi = points.data() + static_cast<std::size_t>(i) * d;
    double* row = out.data() + static_cast<std::size_t>(i) * n;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = euclidean(xi, points.data() + j * d, d);
    }
  }
}

void euclidean_distances_serial(std::span<const double> points, std::size_t n, std::size_t d,
                                std::span<double> out) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = euclidean(points.data() + i * d, points.data() + j * d, d);
    }
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lstree::kernels
