#include "mconj/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "mconj/errors.hpp"

namespace mconj {

// ---------------------------------------------------------------------------
// KPolynomial

KPolynomial::KPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void KPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

KPolynomial KPolynomial::one_minus_t_power(unsigned long e) {
  if (e == 0) return KPolynomial();
  std::vector<Integer> c(e + 1, Integer(0));
  c[0] = 1;
  c[e] = -1;
  return KPolynomial(std::move(c));
}

Integer KPolynomial::coefficient(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Integer(0);
}

Integer KPolynomial::value_at_one() const {
  Integer total = 0;
  for (const Integer& c : coeffs_) total += c;
  return total;
}

KPolynomial KPolynomial::shifted(unsigned long d) const {
  if (is_zero()) return {};
  std::vector<Integer> c(d, Integer(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return KPolynomial(std::move(c));
}

KPolynomial KPolynomial::divided_by_one_minus_t() const {
  if (value_at_one() != 0) {
    throw ConsistencyError("K(t) is not divisible by (1 - t)");
  }
  // If K = (1 - t) Q then q_j = sum_{i <= j} k_i.
  if (coeffs_.size() < 2) return {};
  std::vector<Integer> q(coeffs_.size() - 1);
  Integer running = 0;
  for (std::size_t j = 0; j + 1 < coeffs_.size(); ++j) {
    running += coeffs_[j];
    q[j] = running;
  }
  return KPolynomial(std::move(q));
}

KPolynomial KPolynomial::operator+(const KPolynomial& other) const {
  std::vector<Integer> c(std::max(coeffs_.size(), other.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return KPolynomial(std::move(c));
}

KPolynomial KPolynomial::operator-(const KPolynomial& other) const {
  std::vector<Integer> c(std::max(coeffs_.size(), other.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
  return KPolynomial(std::move(c));
}

KPolynomial KPolynomial::operator*(const KPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Integer> c(coeffs_.size() + other.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return KPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Pivot recursion

namespace {

struct Pivot {
  std::size_t var;  // 1-based
  Exponent power;
};

bool all_pure_powers(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.support_size() <= 1; });
}

// Variable occurring in the most non-pure-power generators, raised to its
// smallest positive exponent among them. x_v^a is then outside I (a pure
// power x_v^b with b <= a would divide those generators) and I : x_v^a
// strictly contains I, so both branches ascend.
Pivot most_frequent_variable(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::size_t> count(n + 1, 0);
  std::vector<Exponent> min_exp(n + 1, std::numeric_limits<Exponent>::max());
  for (const Monomial& g : ideal.generators()) {
    if (g.support_size() <= 1) continue;
    for (std::size_t v = 1; v <= n; ++v) {
      Exponent e = g.exponent(v);
      if (e == 0) continue;
      ++count[v];
      min_exp[v] = std::min(min_exp[v], e);
    }
  }
  std::size_t best = 1;
  for (std::size_t v = 2; v <= n; ++v) {
    if (count[v] > count[best]) best = v;
  }
  return {best, min_exp[best]};
}

// Random non-pure-power generator g, random x_v | g, random 1 <= a <= e_v(g).
// The same argument as above keeps x_v^a outside I.
Pivot random_pivot(const MonomialIdeal& ideal, std::mt19937_64& rng) {
  std::vector<const Monomial*> mixed;
  for (const Monomial& g : ideal.generators()) {
    if (g.support_size() > 1) mixed.push_back(&g);
  }
  std::uniform_int_distribution<std::size_t> pick_gen(0, mixed.size() - 1);
  const Monomial& g = *mixed[pick_gen(rng)];
  std::vector<std::size_t> support;
  for (std::size_t v = 1; v <= g.num_vars(); ++v) {
    if (g.exponent(v) > 0) support.push_back(v);
  }
  std::uniform_int_distribution<std::size_t> pick_var(0, support.size() - 1);
  std::size_t v = support[pick_var(rng)];
  std::uniform_int_distribution<Exponent> pick_exp(1, g.exponent(v));
  return {v, pick_exp(rng)};
}

template <typename ChoosePivot>
KPolynomial k_recursive(const MonomialIdeal& ideal, ChoosePivot& choose) {
  if (ideal.is_zero()) return KPolynomial::one();
  if (ideal.is_unit()) return {};
  if (all_pure_powers(ideal)) {
    KPolynomial k = KPolynomial::one();
    for (const Monomial& g : ideal.generators()) k = k * KPolynomial::one_minus_t_power(g.degree());
    return k;
  }
  Pivot pivot = choose(ideal);
  Monomial u = Monomial::variable(ideal.num_vars(), pivot.var, pivot.power);
  MonomialIdeal with_pivot = sum(ideal, minimalize({u}, ideal.num_vars()));
  MonomialIdeal quotient = colon(ideal, u);
  return k_recursive(with_pivot, choose) + k_recursive(quotient, choose).shifted(u.degree());
}

}  // namespace

KPolynomial k_polynomial(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("k_polynomial: the unit ideal is not proper");
  auto choose = [](const MonomialIdeal& i) { return most_frequent_variable(i); };
  return k_recursive(ideal, choose);
}

KPolynomial k_polynomial(const MonomialIdeal& ideal, std::mt19937_64& rng) {
  if (ideal.is_unit()) throw InputError("k_polynomial: the unit ideal is not proper");
  auto choose = [&rng](const MonomialIdeal& i) { return random_pivot(i, rng); };
  return k_recursive(ideal, choose);
}

// ---------------------------------------------------------------------------
// Codimension and multiplicity

std::size_t root_multiplicity_at_one(const KPolynomial& k) {
  if (k.is_zero()) throw PreconditionError("the zero polynomial vanishes to every order");
  std::size_t s = 0;
  KPolynomial current = k;
  while (current.value_at_one() == 0) {
    current = current.divided_by_one_minus_t();
    ++s;
  }
  return s;
}

namespace {

using VarMask = std::uint64_t;

void cover_search(const std::vector<VarMask>& supports, VarMask chosen, std::size_t size,
                  std::size_t& best) {
  if (size >= best) return;
  auto open = std::find_if(supports.begin(), supports.end(),
                           [&](VarMask s) { return (s & chosen) == 0; });
  if (open == supports.end()) {
    best = size;
    return;
  }
  for (VarMask bits = *open; bits != 0; bits &= bits - 1) {
    VarMask v = bits & (~bits + 1);
    cover_search(supports, chosen | v, size + 1, best);
  }
}

}  // namespace

std::size_t vertex_cover_height(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("vertex_cover_height: the unit ideal is not proper");
  if (ideal.num_vars() > 64) throw ResourceError("vertex cover supports at most 64 variables");
  std::vector<VarMask> supports;
  for (const Monomial& g : ideal.generators()) {
    VarMask mask = 0;
    for (std::size_t v = 1; v <= g.num_vars(); ++v) {
      if (g.exponent(v) > 0) mask |= VarMask{1} << (v - 1);
    }
    supports.push_back(mask);
  }
  // Fewest variables first keeps the search tree narrow.
  std::sort(supports.begin(), supports.end(), [](VarMask a, VarMask b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::size_t best = ideal.num_vars() + 1;
  cover_search(supports, 0, 0, best);
  return best;
}

Integer multiplicity_from_k(const KPolynomial& k, std::size_t s) {
  KPolynomial q = k;
  for (std::size_t step = 0; step < s; ++step) {
    if (q.value_at_one() != 0) {
      throw ConsistencyError("K(t) has a root of order " + std::to_string(step) +
                             " at t = 1, expected " + std::to_string(s));
    }
    q = q.divided_by_one_minus_t();
  }
  Integer e = q.value_at_one();
  if (e <= 0) throw ConsistencyError("non-positive multiplicity " + e.get_str());
  return e;
}

HilbertData hilbert_data(const MonomialIdeal& ideal) {
  HilbertData data;
  data.k = k_polynomial(ideal);
  data.codim = root_multiplicity_at_one(data.k);
  std::size_t cover = ideal.is_zero() ? 0 : vertex_cover_height(ideal);
  if (cover != data.codim) {
    throw ConsistencyError("codimension mismatch for (" + format(ideal) + "): K(t) gives " +
                           std::to_string(data.codim) + ", vertex cover gives " +
                           std::to_string(cover));
  }
  data.dim = ideal.num_vars() - data.codim;
  data.q = data.k;
  for (std::size_t i = 0; i < data.codim; ++i) data.q = data.q.divided_by_one_minus_t();
  data.multiplicity = multiplicity_from_k(data.k, data.codim);
  return data;
}

std::size_t codimension(const MonomialIdeal& ideal) { return hilbert_data(ideal).codim; }

std::size_t dimension(const MonomialIdeal& ideal) { return hilbert_data(ideal).dim; }

Integer multiplicity(const MonomialIdeal& ideal) { return hilbert_data(ideal).multiplicity; }

}  // namespace mconj
