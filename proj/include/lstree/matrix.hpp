#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lstree {

using index_t = std::uint32_t;

/// n observations in d dimensions, row-major. Entries are finite, n >= 2, d >= 1.
class PointMatrix {
 public:
  PointMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * cols_, cols_};
  }
  const std::vector<double>& values() const noexcept { return values_; }

  bool operator==(const PointMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// Square matrix of pairwise distances: symmetric to within 1e-9, zero diagonal,
/// finite and nonnegative.
class DistanceMatrix {
 public:
  static constexpr double symmetry_tolerance = 1e-9;

  DistanceMatrix(std::size_t n, std::vector<double> values);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept { return {values_.data() + i * n_, n_}; }
  const std::vector<double>& values() const noexcept { return values_; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<double> values_;
};

}  // namespace lstree
