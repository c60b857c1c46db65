#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mconj/caps.hpp"
#include "mconj/integer.hpp"
#include "mconj/monomial.hpp"
#include "mconj/resolution.hpp"

namespace mconj {

/// Exact data for one power I^k.
struct PowerStep {
  unsigned k = 0;
  std::size_t num_generators = 0;
  unsigned s = 0;
  Integer e;                // e(S/I^k)
  std::vector<int> M;       // M_i(I^k), i = 1..p
  std::vector<int> m;
  std::vector<int> reg;     // reg_i(S/I^k) = M_i - i
  Rational ratio;           // s! e_k / prod_{i<=s} M_i(I^k)
};

struct PowerScan {
  MonomialIdeal base;
  unsigned kmax = 0;
  unsigned s = 0;  // constant in k
  std::vector<PowerStep> steps;
  bool truncated = false;  // a resource cap stopped the scan early
  std::string truncation_reason;
};

inline constexpr unsigned kDefaultKmax = 6;

/// Scans I, I^2, ..., I^kmax. Requires I proper and nonzero and kmax >= 3.
/// A ResourceError at some k ends the scan there with truncated = true.
PowerScan power_scan(const MonomialIdeal& ideal, unsigned kmax = kDefaultKmax,
                     const ResourceCaps& caps = {});

/// Regularities of the ideal I^k itself: reg_i(I^k) = M_{i+1}(S/I^k) - i,
/// i = 0..p-1. reg_0(I^k) is the largest generator degree.
std::vector<long> ideal_regularities(const PowerStep& step);

/// values[k-1] = q k + c exactly for every k >= k0 (1-based), on the longest
/// such tail; exact only when that tail has at least three points.
struct LinearFit {
  long q = 0;
  long c = 0;
  unsigned k0 = 0;
  bool exact = false;
};
LinearFit fit_linear(std::span<const long> values);

enum class ScanStatus { Consistent, Violated, Inconclusive };
const char* to_string(ScanStatus status);

struct SlopeReport {
  ScanStatus status = ScanStatus::Inconclusive;
  std::vector<LinearFit> fits;  // reg_i(I^k), i = 0..s-1
  LinearFit reg_fit;            // reg(I^k) = max_i reg_i(I^k)
  long q0 = 0;
  bool slopes_equal = false;    // every q_i equals q_0, and reg's slope too
  long c_min = 0;
  long c_max = 0;
  /// reg_i(S/I^k) >= reg_{i-1}(S/I^k) for 1 <= i <= s at every scanned k.
  bool regularity_monotone = false;
};
SlopeReport slope_equality_check(const PowerScan& scan);

/// e(I, S) read off as the constant s-th finite difference of e(S/I^k) (the
/// leading coefficient of s! e(S/I^k)), against q = slope of reg_0(I^k).
struct AsymptoticMultiplicity {
  ScanStatus status = ScanStatus::Inconclusive;
  Integer e_IS;
  unsigned onset = 0;  // first k of the exactly polynomial tail
  long q = 0;
  Integer q_power_s;
  bool bound_holds = false;  // e(I,S) <= q^s
};
AsymptoticMultiplicity asymptotic_multiplicity(const PowerScan& scan);

struct LimitRatioReport {
  std::vector<Rational> ratios;
  unsigned tail_start = 0;
  bool tail_at_most_one = false;
  bool all_at_most_one = false;
  std::optional<Rational> fitted_limit;  // e(I,S) / q^s when both fits exist
};
LimitRatioReport limit_ratio_report(const PowerScan& scan);

/// reg_i >= reg_{i-1} for 1 <= i <= s, with reg_0(S/I) = 0.
bool regularity_monotone(const ShiftSummary& summary, unsigned s);

}  // namespace mconj
