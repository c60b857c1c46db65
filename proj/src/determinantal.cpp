#include "mconj/determinantal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mconj/errors.hpp"

namespace mconj {

DegreeMatrix DegreeMatrix::from_degree_sequences(std::vector<long> a, std::vector<long> b) {
  if (b.empty()) throw InputError("degree matrix needs at least one row");
  if (a.size() < b.size()) {
    throw InputError("degree matrix needs m <= n (got m = " + std::to_string(b.size()) +
                     ", n = " + std::to_string(a.size()) + ")");
  }
  if (!std::is_sorted(a.begin(), a.end())) {
    throw InputError("column degrees a must be sorted nondecreasing");
  }
  if (!std::is_sorted(b.begin(), b.end())) {
    throw InputError("row degrees b must be sorted nondecreasing");
  }
  DegreeMatrix dm;
  dm.m_ = b.size();
  dm.r_ = a.size() - b.size();
  dm.u_.assign(dm.r_ + 1, std::vector<long>(dm.m_));
  for (std::size_t i = 1; i <= dm.r_ + 1; ++i) {
    for (std::size_t j = 1; j <= dm.m_; ++j) {
      // u_{ij} = d_{j, i+j-1} = b_j - a_{i+j-1}
      dm.u_[i - 1][j - 1] = b[j - 1] - a[i + j - 2];
    }
  }
  dm.a_ = std::move(a);
  dm.b_ = std::move(b);
  dm.validate();
  return dm;
}

DegreeMatrix DegreeMatrix::from_u(std::vector<std::vector<long>> u, Orientation orientation) {
  if (u.empty() || u.front().empty()) throw InputError("u-array must be nonempty");
  for (const auto& row : u) {
    if (row.size() != u.front().size()) throw InputError("u-array rows must have equal length");
  }
  DegreeMatrix dm;
  dm.r_ = u.size() - 1;
  dm.m_ = u.front().size();
  dm.u_ = std::move(u);
  dm.orientation_ = orientation;
  dm.validate();
  return dm;
}

void DegreeMatrix::validate() const {
  const auto where = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 1; i <= r_ + 1; ++i) {
    for (std::size_t j = 1; j <= m_; ++j) {
      if (u(i, j) < 1) {
        throw InputError("u" + where(i, j) + " = " + std::to_string(u(i, j)) +
                         " must be at least 1");
      }
    }
  }
  const bool standard = orientation_ == Orientation::Standard;
  const auto ordered = [standard](long hi, long lo) { return standard ? hi >= lo : hi <= lo; };
  for (std::size_t i = 1; i <= r_; ++i) {
    for (std::size_t j = 1; j <= m_; ++j) {
      if (!ordered(u(i, j), u(i + 1, j))) {
        throw InputError("column monotonicity fails between u" + where(i, j) + " and u" +
                         where(i + 1, j));
      }
      if (j > 1 && !ordered(u(i, j), u(i + 1, j - 1))) {
        throw InputError("skew monotonicity fails between u" + where(i, j) + " and u" +
                         where(i + 1, j - 1));
      }
    }
  }
}

bool DegreeMatrix::all_entries_equal() const {
  const long first = u_.front().front();
  return std::all_of(u_.begin(), u_.end(), [first](const std::vector<long>& row) {
    return std::all_of(row.begin(), row.end(), [first](long x) { return x == first; });
  });
}

DegreeMatrix power_matrix(std::span<const long> f_degrees, std::size_t m) {
  if (f_degrees.empty()) throw InputError("power_matrix needs at least one degree");
  if (m < 1) throw InputError("power_matrix needs m >= 1");
  if (!std::is_sorted(f_degrees.begin(), f_degrees.end(), std::greater<>())) {
    throw InputError("power_matrix degrees must be non-increasing; sort them descending first");
  }
  std::vector<std::vector<long>> u;
  for (long f : f_degrees) u.emplace_back(m, f);
  return DegreeMatrix::from_u(std::move(u));
}

namespace {

void sum_weakly_increasing(const DegreeMatrix& dm, std::size_t i, std::size_t j_min,
                           const Integer& partial, Integer& total) {
  if (i > dm.r() + 1) {
    total += partial;
    return;
  }
  for (std::size_t j = j_min; j <= dm.rows(); ++j) {
    sum_weakly_increasing(dm, i + 1, j, partial * dm.u(i, j), total);
  }
}

}  // namespace

Integer ht_multiplicity(const DegreeMatrix& matrix) {
  Integer total = 0;
  sum_weakly_increasing(matrix, 1, 1, Integer(1), total);
  return total;
}

EnShifts en_shifts(const DegreeMatrix& dm) {
  const std::size_t m = dm.rows();
  const std::size_t r = dm.r();
  EnShifts out;
  long top_row = 0;  // sum_{j<m} u_{1j}
  for (std::size_t j = 1; j < m; ++j) top_row += dm.u(1, j);
  long bottom_row = 0;  // sum_{j=2}^{m} u_{r+1,j}
  for (std::size_t j = 2; j <= m; ++j) bottom_row += dm.u(r + 1, j);
  for (std::size_t k = 0; k <= r; ++k) {
    long upper = top_row;
    for (std::size_t i = 1; i <= k + 1; ++i) upper += dm.u(i, m);
    long lower = bottom_row;
    for (std::size_t i = r + 1 - k; i <= r + 1; ++i) lower += dm.u(i, 1);
    out.M.push_back(upper);
    out.m.push_back(lower);
  }

  if (dm.a() && dm.b()) {
    const auto& a = *dm.a();
    const auto& b = *dm.b();
    const long base = std::accumulate(b.begin(), b.end(), 0L) - std::accumulate(a.begin(), a.end(), 0L);
    for (std::size_t k = 0; k <= r; ++k) {
      // M_{k+1} = -a + b + a_{m+k+1} + ... + a_n + k b_m
      long upper = base + static_cast<long>(k) * b[m - 1];
      for (std::size_t idx = m + k + 1; idx <= a.size(); ++idx) upper += a[idx - 1];
      // m_{k+1} = -a + b + a_1 + ... + a_{r-k} + k b_1
      long lower = base + static_cast<long>(k) * b[0];
      for (std::size_t idx = 1; idx <= r - k; ++idx) lower += a[idx - 1];
      if (upper != out.M[k] || lower != out.m[k]) {
        throw ConsistencyError("Eagon-Northcott shift forms disagree at k = " + std::to_string(k));
      }
    }
  }
  return out;
}

DeterminantalBounds check_bounds(const DegreeMatrix& dm) {
  DeterminantalBounds out;
  out.e = ht_multiplicity(dm);
  out.shifts = en_shifts(dm);
  out.scaled_e = factorial(dm.r() + 1) * out.e;
  out.upper_product = 1;
  out.lower_product = 1;
  for (long v : out.shifts.M) out.upper_product *= v;
  for (long v : out.shifts.m) out.lower_product *= v;
  if (dm.orientation() == Orientation::Standard) {
    out.upper_slack = out.upper_product - out.scaled_e;
    out.lower_slack = out.scaled_e - out.lower_product;
  } else {
    out.upper_slack = out.scaled_e - out.upper_product;
    out.lower_slack = out.lower_product - out.scaled_e;
  }
  out.upper_holds = out.upper_slack >= 0;
  out.lower_holds = out.lower_slack >= 0;
  out.tight_upper = out.upper_slack == 0;
  out.tight_lower = out.lower_slack == 0;
  out.pure = out.shifts.M == out.shifts.m;
  out.all_equal = dm.all_entries_equal();
  // A single maximal minor (r = 0) is always pure and tight, whatever u is.
  const bool pure_expected = dm.r() == 0 || out.all_equal;
  out.tightness_consistent = out.tight_upper == out.pure && out.tight_lower == out.pure &&
                             out.pure == pure_expected;
  return out;
}

DegreeMatrix dualize(const DegreeMatrix& dm) {
  const std::size_t rows = dm.r() + 1;
  const std::size_t m = dm.rows();
  std::vector<std::vector<long>> u(rows, std::vector<long>(m));
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= m; ++j) u[i - 1][j - 1] = dm.u(rows + 1 - i, m + 1 - j);
  }
  Orientation flipped = dm.orientation() == Orientation::Standard ? Orientation::Reversed
                                                                  : Orientation::Standard;
  return DegreeMatrix::from_u(std::move(u), flipped);
}

}  // namespace mconj
