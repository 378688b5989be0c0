#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wotboost {

/// Dense row-major matrix of doubles. Rows are feature vectors.
struct Matrix {
  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t cols = 0;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : values(r * c, 0.0), rows(r), cols(c) {}

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * cols, cols};
  }

  void append_row(std::span<const double> row_values) {
    values.insert(values.end(), row_values.begin(), row_values.end());
    ++rows;
  }

  bool empty() const { return rows == 0; }
};

/// Squared Euclidean distance between two rows of equal length.
double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace wotboost
