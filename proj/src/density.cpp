#include "lstree/density.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lstree/errors.hpp"

namespace lstree {
namespace {

void check_inputs(std::span<const double> k_radius, std::size_t n, std::size_t k) {
  if (k_radius.size() != n) {
    throw data_error("density", "k_radius has " + std::to_string(k_radius.size()) +
                                    " entries for n = " + std::to_string(n));
  }
  if (n < 2 || k < 1 || k > n - 1) {
    throw data_error("density", "k must lie in [1, n-1]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(k_radius[i] > 0.0) || !std::isfinite(k_radius[i])) {
      throw data_error("density", "k-neighbor radius of observation " + std::to_string(i) +
                                      " is not positive; the sample contains duplicate points, "
                                      "deduplicate or jitter them first");
    }
  }
}

DensityVector evaluate(std::span<const double> k_radius, std::size_t n, std::size_t k,
                       double volume, std::size_t d, DensityKind kind) {
  DensityVector out;
  out.kind = kind;
  out.values.resize(n);
  const double scale = static_cast<double>(n) * volume;
  for (std::size_t i = 0; i < n; ++i) {
    const double r_pow = d == 1 ? k_radius[i] : std::pow(k_radius[i], static_cast<double>(d));
    out.values[i] = static_cast<double>(k) / (scale * r_pow);
    if (!std::isfinite(out.values[i]) || out.values[i] <= 0.0) {
      throw data_error("density", "density of observation " + std::to_string(i) +
                                      " is not a finite positive number");
    }
  }
  return out;
}

}  // namespace

double unit_ball_volume(std::size_t d) {
  if (d < 1) throw data_error("density", "dimension must be >= 1");
  const double half = static_cast<double>(d) / 2.0;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

DensityVector knn_density(std::span<const double> k_radius, std::size_t n, std::size_t d,
                          std::size_t k) {
  check_inputs(k_radius, n, k);
  return evaluate(k_radius, n, k, unit_ball_volume(d), d, DensityKind::density);
}

DensityVector knn_pseudo_density(std::span<const double> k_radius, std::size_t n, std::size_t k) {
  check_inputs(k_radius, n, k);
  return evaluate(k_radius, n, k, 1.0, 1, DensityKind::pseudo);
}

}  // namespace lstree
