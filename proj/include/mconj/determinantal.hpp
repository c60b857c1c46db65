#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mconj/integer.hpp"

namespace mconj {

/// Which way the monotonicity conditions on the u-array point. Matrices built
/// from degree data are Standard; dualize() flips the orientation.
enum class Orientation { Standard, Reversed };

/// Degree data of an m x n homogeneous matrix (m <= n, r = n - m), carried as
/// the u-array u_{ij} = d_{j, i+j-1}, i = 1..r+1, j = 1..m, where
/// d_{ij} = b_i - a_j. Standard orientation requires
///   u_{1j} >= u_{2j} >= ... >= u_{r+1,j}   and   u_{ij} >= u_{i+1,j-1},
/// Reversed orientation the opposite inequalities; every entry must be >= 1.
class DegreeMatrix {
 public:
  /// a nondecreasing of length n, b nondecreasing of length m <= n.
  static DegreeMatrix from_degree_sequences(std::vector<long> a, std::vector<long> b);
  /// u given row-major: u[i-1][j-1] = u_{ij}.
  static DegreeMatrix from_u(std::vector<std::vector<long>> u,
                             Orientation orientation = Orientation::Standard);

  std::size_t rows() const { return m_; }           // m
  std::size_t cols() const { return m_ + r_; }      // n
  std::size_t r() const { return r_; }
  Orientation orientation() const { return orientation_; }

  /// u_{ij}, i in 1..r+1, j in 1..m.
  long u(std::size_t i, std::size_t j) const { return u_[i - 1][j - 1]; }
  const std::vector<std::vector<long>>& u_array() const { return u_; }

  const std::optional<std::vector<long>>& a() const { return a_; }
  const std::optional<std::vector<long>>& b() const { return b_; }

  bool all_entries_equal() const;

  friend bool operator==(const DegreeMatrix& x, const DegreeMatrix& y) {
    return x.u_ == y.u_ && x.orientation_ == y.orientation_;
  }

 private:
  DegreeMatrix() = default;
  void validate() const;

  std::size_t m_ = 0;
  std::size_t r_ = 0;
  std::vector<std::vector<long>> u_;
  Orientation orientation_ = Orientation::Standard;
  std::optional<std::vector<long>> a_;
  std::optional<std::vector<long>> b_;
};

/// Degree data of the m x (m + r) matrix whose i-th main diagonal holds f_i,
/// so that its maximal minors generate (f_1, ..., f_{r+1})^m. f_degrees must
/// be non-increasing and positive.
DegreeMatrix power_matrix(std::span<const long> f_degrees, std::size_t m);

/// e(S/I_m(H)) = sum over 1 <= j_1 <= ... <= j_{r+1} <= m of prod_i u_{i, j_i}.
Integer ht_multiplicity(const DegreeMatrix& matrix);

/// Extreme shifts of the Eagon-Northcott resolution, k = 0..r (0-based):
///   M_{k+1} = sum_{j<m} u_{1j} + sum_{i<=k+1} u_{im}
///   m_{k+1} = sum_{i=r+1-k}^{r+1} u_{i1} + sum_{j=2}^{m} u_{r+1,j}
/// With (a, b) available the forms -a+b+... are evaluated too and must agree
/// (ConsistencyError otherwise).
struct EnShifts {
  std::vector<long> M;
  std::vector<long> m;
};
EnShifts en_shifts(const DegreeMatrix& matrix);

struct DeterminantalBounds {
  Integer e;
  EnShifts shifts;
  Integer scaled_e;       // (r+1)! e
  Integer upper_product;  // prod M_{k+1}
  Integer lower_product;  // prod m_{k+1}
  // Slacks are signed in the direction the orientation predicts: Standard
  // expects lower_product <= scaled_e <= upper_product, Reversed the opposite.
  Integer upper_slack;
  Integer lower_slack;
  bool upper_holds = false;
  bool lower_holds = false;
  bool tight_upper = false;
  bool tight_lower = false;
  bool pure = false;        // M == m
  bool all_equal = false;   // every u_{ij} equal
  /// tight in either bound <=> pure <=> (r = 0 or all entries equal)
  bool tightness_consistent = false;
};
DeterminantalBounds check_bounds(const DegreeMatrix& matrix);

/// u_{ij} -> u_{r+2-i, m+1-j}, flipping the orientation. An involution.
DegreeMatrix dualize(const DegreeMatrix& matrix);

}  // namespace mconj
