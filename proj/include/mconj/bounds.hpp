#pragma once

#include <optional>

#include "mconj/caps.hpp"
#include "mconj/hilbert.hpp"
#include "mconj/integer.hpp"
#include "mconj/monomial.hpp"
#include "mconj/resolution.hpp"

namespace mconj {

struct ConjectureFlags {
  bool cm = false;
  bool pure = false;
  bool quasi_pure = false;
  std::optional<bool> conj1_holds;  // evaluated only for Cohen-Macaulay S/I
  bool conj2_holds = false;
  std::optional<bool> tight_lower;  // present exactly when lower_cm is
  bool tight_upper = false;
  bool improved_ok = false;
};

/// Verdict record for one ideal.
///   lower_cm    = (prod_{i<=p} m_i) / p!   (Cohen-Macaulay only)
///   upper_codim = (prod_{i<=s} M_i) / s!
/// When S/I is Cohen-Macaulay p = s, so upper_codim is also the
/// Cohen-Macaulay upper bound.
struct ConjectureReport {
  MonomialIdeal ideal;
  Integer e;
  int s = 0;
  int p = 0;
  std::optional<Rational> lower_cm;
  Rational upper_codim;
  ConjectureFlags flags;

  KPolynomial k;
  BettiTable betti;
  ShiftSummary shift_summary;
  /// Set when a bound fails, or is reached without a pure Cohen-Macaulay
  /// resolution.
  bool counterexample_candidate = false;
};

/// All bounds compared as exact integers: s! e against prod M_i and
/// p! e against prod m_i. Requires I proper and nonzero.
ConjectureReport check_conjectures(const MonomialIdeal& ideal, const ResourceCaps& caps = {},
                                   BettiRoute route = BettiRoute::Auto);

/// check_conjectures plus the counterexample-candidate marking.
ConjectureReport check_improved(const MonomialIdeal& ideal, const ResourceCaps& caps = {},
                                BettiRoute route = BettiRoute::Auto);

/// p! e == prod_{i<=p} d_i for a pure Cohen-Macaulay table. The codimension
/// is read off the table's own Euler characteristic. Throws
/// PreconditionError on a non-pure or non-Cohen-Macaulay table.
bool huneke_miller_check(const BettiTable& table, const Integer& e);

/// Shift sums over all tuples (d_{1 j_1}, ..., d_{s j_s}), one shift per
/// homological degree, each shift repeated with its Betti multiplicity:
///   SA = sum prod_i d_{i j_i} V(d_{1 j_1}, ..., d_{s j_s})
///   SB = sum V(d_{1 j_1}, ..., d_{s j_s})
/// with V the Vandermonde product prod_{a<b} (d_b - d_a).
struct VandermondeCertificate {
  Integer SA;
  Integer SB;
  int s = 0;
  Integer e;

  bool quasi_pure = false;
  bool pure = false;
  // (prod m_i) SB <= s! e SB <= (prod M_i) SB, meaningful when quasi-pure.
  Integer lower_value;
  Integer middle_value;
  Integer upper_value;
  bool lower_tight = false;
  bool upper_tight = false;
  /// Quasi-pure instances: SB > 0, sandwich holds, and each side is tight
  /// exactly when the resolution is pure. True vacuously otherwise.
  bool sandwich_consistent = true;
};

/// Requires a Cohen-Macaulay table (PreconditionError otherwise). Throws
/// ConsistencyError when SA != s! e SB.
VandermondeCertificate vandermonde_certificate(const BettiTable& table, const Integer& e);

}  // namespace mconj
