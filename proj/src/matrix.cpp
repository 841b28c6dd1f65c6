#include "lstree/matrix.hpp"

#include <cmath>
#include <string>

#include "lstree/errors.hpp"

namespace lstree {

PointMatrix::PointMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ < 2) {
    throw data_error("dataset_io", "need at least 2 observations, got " + std::to_string(rows_));
  }
  if (cols_ < 1) {
    throw data_error("dataset_io", "need at least 1 column");
  }
  if (values_.size() != rows_ * cols_) {
    throw data_error("dataset_io", "value count does not match " + std::to_string(rows_) + "x" +
                                       std::to_string(cols_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw data_error("dataset_io", "non-finite entry at row " + std::to_string(i / cols_) +
                                         ", column " + std::to_string(i % cols_));
    }
  }
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw data_error("dataset_io", "distance matrix is not square");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) {
      throw data_error("dataset_io", "nonzero diagonal at row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v)) {
        throw data_error("dataset_io", "non-finite distance at (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ")");
      }
      if (v < 0.0) {
        throw data_error("dataset_io", "negative distance at (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > symmetry_tolerance) {
        throw data_error("dataset_io", "asymmetric distances at (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace lstree
