#include "mconj/linalg.hpp"

#include <utility>

namespace mconj {

std::size_t rank_over_rationals(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && a(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) {
      for (std::size_t c = col; c < cols; ++c) std::swap(a(rank, c), a(pivot_row, c));
    }
    const Integer pivot = a(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer factor = a(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        // Sylvester's identity makes this division exact.
        Integer value = pivot * a(r, c) - factor * a(rank, c);
        mpz_divexact(a(r, c).get_mpz_t(), value.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a(r, col) = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace mconj
