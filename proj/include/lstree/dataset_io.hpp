#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "lstree/matrix.hpp"

namespace lstree {

struct CsvOptions {
  char delimiter = ',';
  bool skip_header = false;
};

/// Reads a numeric CSV (one observation per row). Blank lines are ignored;
/// errors name the 1-based physical line.
PointMatrix load_points(const std::filesystem::path& path, CsvOptions options = {});

/// Reads a square CSV of pairwise distances and validates it.
DistanceMatrix load_distance_matrix(const std::filesystem::path& path, CsvOptions options = {});

struct LabeledSample {
  PointMatrix points;
  std::vector<int> labels;
};

// Fixed generator presets. They are part of the documented dataset definitions
// and deliberately not exposed as parameters.
namespace presets {

// Three spherical unit-variance Gaussians on an equilateral triangle of side 10,
// so every pair of centers is 10 standard deviations apart.
inline constexpr double gauss3_sigma = 1.0;
inline constexpr double gauss3_centers[3][2] = {{0.0, 0.0}, {10.0, 0.0}, {5.0, 8.660254037844386}};

// Tight core at the origin plus a wide ring. The ring spreads its mass over a
// circumference much larger than the core area, so its density stays below the
// core peak even when it carries most of the sample.
inline constexpr double crater_core_sigma = 0.5;
inline constexpr double crater_ring_radius = 5.0;
inline constexpr double crater_ring_sigma = 0.4;

}  // namespace presets

/// Three equal-weight components; component of point i is i mod 3.
LabeledSample generate_gaussian_mixture(std::size_t n, std::uint64_t seed);

/// Label 0 = core, 1 = ring. Each point is independently a ring point with
/// probability ring_mass.
LabeledSample generate_crater(std::size_t n, double ring_mass, std::uint64_t seed);

}  // namespace lstree
