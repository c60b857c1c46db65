#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mconj {

using Exponent = std::uint32_t;

/// A monomial x_1^{e_1} ... x_n^{e_n}. Variables are indexed 1..n in the
/// public API; the exponent vector itself is stored 0-based.
class Monomial {
 public:
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t n);
  /// x_var^power, var in 1..n.
  static Monomial variable(std::size_t n, std::size_t var, Exponent power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  std::span<const Exponent> exponents() const { return exps_; }
  /// Exponent of x_var, var in 1..n.
  Exponent exponent(std::size_t var) const;
  unsigned long degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Number of variables with positive exponent.
  std::size_t support_size() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, other): the generator of (this) : other.
  Monomial colon(const Monomial& other) const;
  /// Exact quotient; throws PreconditionError unless other divides this.
  Monomial divided_by(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  /// m(u): the largest i with x_i | u. Throws PreconditionError for u = 1.
  std::size_t max_index() const;

  /// x_i * u / x_j. Requires x_j | u.
  Monomial exchanged(std::size_t i, std::size_t j) const;

  /// Same monomial in n + extra variables.
  Monomial with_extra_vars(std::size_t extra) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  unsigned long degree_ = 0;
};

/// Canonical order: total degree first, then lexicographic with x_1 > x_2 > ...
/// So x1^2 < x1*x2 < x2^2 < x1^3.
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& u) const noexcept;
};

std::size_t max_index(const Monomial& u);

/// Minimally generated monomial ideal in n variables, generators kept in
/// graded lexicographic order. The zero ideal has no generators; the unit
/// ideal has the single generator 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);
  /// (x_1, ..., x_n)
  static MonomialIdeal maximal(std::size_t n);

  std::size_t num_vars() const { return n_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }
  bool contains(const Monomial& u) const;

  unsigned long min_degree() const;
  unsigned long max_degree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

  std::size_t n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^k; by convention power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned k);
/// (I : u)
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

// Both predicates only test minimal generators: the exchange condition on
// G(I) already implies it for every monomial of I.
bool is_stable(const MonomialIdeal& ideal);
bool is_strongly_stable(const MonomialIdeal& ideal);

/// Smallest strongly stable ideal containing the given monomials.
MonomialIdeal borel_closure(std::span<const Monomial> gens, std::size_t n);

/// I_<j>: the ideal generated by all degree-j monomials of I.
MonomialIdeal graded_component_ideal(const MonomialIdeal& ideal,
                                     unsigned long degree);

/// I extended to the polynomial ring in n + extra variables.
MonomialIdeal with_extra_vars(const MonomialIdeal& ideal, std::size_t extra);

/// All monomials of the given degree in n variables, in graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned long degree);

/// Parses `x1^2, x1*x2, x2^3`. "1" is the unit monomial; "0" or an empty
/// string is the zero ideal. Errors report the character position.
MonomialIdeal parse_ideal(std::string_view text, std::size_t n);
Monomial parse_monomial(std::string_view text, std::size_t n);

std::string format(const Monomial& u);
std::string format(const MonomialIdeal& ideal);

}  // namespace mconj
