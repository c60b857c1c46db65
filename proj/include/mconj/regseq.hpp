#pragma once

#include <span>
#include <vector>

#include "mconj/integer.hpp"
#include "mconj/resolution.hpp"

namespace mconj {

/// Abstract shift data of S/I: codimension s, extreme shifts M_1..M_q and
/// m_1..m_q (q >= s, stored 0-based), and the multiplicity e. A profile need
/// not come from an actual ideal.
struct ShiftProfile {
  int s = 0;
  std::vector<long> M;
  std::vector<long> m;
  Integer e = 1;

  /// Throws InputError unless q >= s, 0 < m_i <= M_i and e > 0.
  void validate() const;

  /// prod_{i<=s} m_i <= s! e <= prod_{i<=s} M_i
  bool satisfies_bounds() const;
  bool lower_tight() const;
  bool upper_tight() const;

  friend bool operator==(const ShiftProfile&, const ShiftProfile&) = default;
};

/// Profile of an ideal from its shift summary, codimension and multiplicity.
ShiftProfile profile_of(const ShiftSummary& summary, int s, const Integer& e);

/// Adjoin a regular element of degree d:
///   M'_i = max{M_i, M_{i-1} + d},  m'_i = min{m_i, m_{i-1} + d},  i = 1..q+1,
/// with M_0 = m_0 = 0 and the missing M_{q+1}, m_{q+1} ignored; e' = e d,
/// s' = s + 1. Throws InputError for d < 1.
ShiftProfile extend_shifts(const ShiftProfile& profile, long d);

struct ExtensionTrace {
  std::vector<ShiftProfile> steps;  // steps[0] is the input profile
  std::vector<bool> step_ok;        // bounds hold after each extension
  bool ok = true;
};

/// Iterates extend_shifts over the degrees and checks the bounds after every
/// step. Throws InputError if the input profile breaks its own bounds or a
/// degree is < 1. A false result contradicts the regular-sequence theorem.
ExtensionTrace verify_extension(const ShiftProfile& profile, std::span<const long> degrees);

/// (s+1) d prod_{i<=s} M_i <= prod_{i<=s+1} max{M_i, M_{i-1} + d}, M_0 = 0.
/// When M has no (s+1)-th entry the last factor is M_s + d.
bool inequality_star(int s, long d, std::span<const long> M);

/// Some d has M_i = i d for every i <= s and every degree equal to d.
bool tightness_condition(const ShiftProfile& profile, std::span<const long> degrees);

}  // namespace mconj
