#pragma once

#include <cstddef>
#include <vector>

#include "mconj/integer.hpp"

namespace mconj {

/// Dense row-major integer matrix, just enough for boundary-map ranks.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Consumes the matrix.
std::size_t rank_over_rationals(IntMatrix matrix);

}  // namespace mconj
