#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lstree {

enum class DensityKind { density, pseudo };

struct DensityVector {
  std::vector<double> values;
  DensityKind kind = DensityKind::density;
};

/// Volume of the Euclidean unit ball in R^d.
double unit_ball_volume(std::size_t d);

/// kNN density estimate k / (n * v_d * r_k^d) at every observation.
/// Throws on a zero radius (duplicate points).
DensityVector knn_density(std::span<const double> k_radius, std::size_t n, std::size_t d,
                          std::size_t k);

/// Distance-only variant with the ball volume dropped and d = 1: k / (n * r_k).
/// Only the induced ordering is meaningful.
DensityVector knn_pseudo_density(std::span<const double> k_radius, std::size_t n, std::size_t k);

}  // namespace lstree
