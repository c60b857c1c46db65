#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "mconj/integer.hpp"
#include "mconj/monomial.hpp"

namespace mconj {

/// Integer polynomial in t, coefficient of t^j at index j, trailing zeros
/// trimmed. For S/I the Hilbert series is K(t) / (1 - t)^n.
class KPolynomial {
 public:
  KPolynomial() = default;  // the zero polynomial
  explicit KPolynomial(std::vector<Integer> coefficients);

  static KPolynomial one() { return KPolynomial({Integer(1)}); }
  /// (1 - t^e)
  static KPolynomial one_minus_t_power(unsigned long e);

  std::span<const Integer> coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^j, zero past the end.
  Integer coefficient(std::size_t j) const;

  Integer value_at_one() const;
  /// this * t^d
  KPolynomial shifted(unsigned long d) const;
  /// Exact division by (1 - t); the remainder is K(1), which must be zero.
  KPolynomial divided_by_one_minus_t() const;

  KPolynomial operator+(const KPolynomial& other) const;
  KPolynomial operator-(const KPolynomial& other) const;
  KPolynomial operator*(const KPolynomial& other) const;

  friend bool operator==(const KPolynomial& a, const KPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// K-polynomial of S/I by the pivot recursion
///   K(I) = K(I + (u)) + t^{deg u} K(I : u),
/// pivoting on a pure power of the variable that occurs in the most
/// non-pure-power generators. Throws InputError on the unit ideal.
KPolynomial k_polynomial(const MonomialIdeal& ideal);

/// Same recursion with a randomly chosen pivot at every node. The result must
/// not depend on the pivots; this entry point exists to check that.
KPolynomial k_polynomial(const MonomialIdeal& ideal, std::mt19937_64& rng);

/// Order of vanishing of K(t) at t = 1.
std::size_t root_multiplicity_at_one(const KPolynomial& k);

/// Height via the minimum set of variables meeting the support of every
/// generator.
std::size_t vertex_cover_height(const MonomialIdeal& ideal);

struct HilbertData {
  KPolynomial k;
  KPolynomial q;          // K(t) / (1 - t)^s
  std::size_t codim = 0;  // s
  std::size_t dim = 0;    // n - s
  Integer multiplicity;   // Q(1)
};

/// K, codimension (both routes, must agree), dimension and multiplicity.
/// Zero ideal: s = 0, dim = n, e = 1.
HilbertData hilbert_data(const MonomialIdeal& ideal);

std::size_t codimension(const MonomialIdeal& ideal);
std::size_t dimension(const MonomialIdeal& ideal);
Integer multiplicity(const MonomialIdeal& ideal);

/// Divide K(t) by (1 - t) exactly s times and evaluate at 1. Throws
/// ConsistencyError if a remainder appears before s steps or Q(1) <= 0.
Integer multiplicity_from_k(const KPolynomial& k, std::size_t s);

}  // namespace mconj
