#include "mconj/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "mconj/errors.hpp"

namespace mconj {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw InputError("monomial needs at least one variable");
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }

Monomial Monomial::variable(std::size_t n, std::size_t var, Exponent power) {
  if (var < 1 || var > n) {
    throw InputError("variable index " + std::to_string(var) + " outside 1.." +
                     std::to_string(n));
  }
  std::vector<Exponent> exps(n, 0);
  exps[var - 1] = power;
  return Monomial(std::move(exps));
}

Exponent Monomial::exponent(std::size_t var) const {
  if (var < 1 || var > exps_.size()) {
    throw InputError("variable index " + std::to_string(var) + " out of range");
  }
  return exps_[var - 1];
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
}

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw InputError("monomials live in different rings (" +
                     std::to_string(a.num_vars()) + " vs " +
                     std::to_string(b.num_vars()) + " variables)");
  }
}

}  // namespace

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::colon(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = exps_[i] > other.exps_[i] ? exps_[i] - other.exps_[i] : 0;
  }
  return Monomial(std::move(out));
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) {
    throw PreconditionError(format(other) + " does not divide " + format(*this));
  }
  return colon(other);
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(out));
}

std::size_t Monomial::max_index() const {
  for (std::size_t i = exps_.size(); i > 0; --i) {
    if (exps_[i - 1] > 0) return i;
  }
  throw PreconditionError("max_index is undefined for the monomial 1");
}

Monomial Monomial::exchanged(std::size_t i, std::size_t j) const {
  if (exponent(j) == 0) {
    throw PreconditionError("x" + std::to_string(j) + " does not divide " + format(*this));
  }
  std::vector<Exponent> out(exps_);
  out[j - 1] -= 1;
  out[i - 1] += 1;
  return Monomial(std::move(out));
}

Monomial Monomial::with_extra_vars(std::size_t extra) const {
  std::vector<Exponent> out(exps_);
  out.resize(exps_.size() + extra, 0);
  return Monomial(std::move(out));
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  // Larger exponent of x_1 comes first.
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::size_t MonomialHash::operator()(const Monomial& u) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : u.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t max_index(const Monomial& u) { return u.max_index(); }

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("an ideal needs at least one variable");
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return minimalize({Monomial::one(n)}, n);
}

MonomialIdeal MonomialIdeal::maximal(std::size_t n) {
  std::vector<Monomial> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(Monomial::variable(n, i));
  return minimalize(std::move(gens), n);
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.num_vars() != n_) throw InputError("monomial has the wrong number of variables");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(u); });
}

unsigned long MonomialIdeal::min_degree() const {
  if (gens_.empty()) throw PreconditionError("zero ideal has no generator degrees");
  return gens_.front().degree();
}

unsigned long MonomialIdeal::max_degree() const {
  if (gens_.empty()) throw PreconditionError("zero ideal has no generator degrees");
  return gens_.back().degree();
}

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n) {
  MonomialIdeal ideal(n);
  for (const Monomial& g : gens) {
    if (g.num_vars() != n) {
      throw InputError("generator " + format(g) + " has " + std::to_string(g.num_vars()) +
                       " variables, expected " + std::to_string(n));
    }
  }
  std::sort(gens.begin(), gens.end(), graded_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A divisor has degree <= its multiple, so earlier elements are the only
  // candidates to remove a later one.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (Monomial& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  ideal.gens_ = std::move(kept);
  return ideal;
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw InputError("ideals live in different rings (" + std::to_string(a.num_vars()) +
                     " vs " + std::to_string(b.num_vars()) + " variables)");
  }
}

}  // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(gens), a.num_vars());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.generators()) {
    for (const Monomial& h : b.generators()) gens.push_back(g * h);
  }
  return minimalize(std::move(gens), a.num_vars());
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned k) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.num_vars());
  for (unsigned i = 0; i < k; ++i) result = product(result, ideal);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.num_vars() != ideal.num_vars()) {
    throw InputError("colon monomial has the wrong number of variables");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.colon(u));
  return minimalize(std::move(gens), ideal.num_vars());
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.generators()) {
    if (u.is_one()) continue;
    std::size_t m = u.max_index();
    for (std::size_t i = 1; i < m; ++i) {
      if (!ideal.contains(u.exchanged(i, m))) return false;
    }
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.generators()) {
    for (std::size_t j = 2; j <= ideal.num_vars(); ++j) {
      if (u.exponent(j) == 0) continue;
      for (std::size_t i = 1; i < j; ++i) {
        if (!ideal.contains(u.exchanged(i, j))) return false;
      }
    }
  }
  return true;
}

MonomialIdeal borel_closure(std::span<const Monomial> gens, std::size_t n) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier;
  for (const Monomial& g : gens) {
    if (g.num_vars() != n) throw InputError("generator has the wrong number of variables");
    if (seen.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    Monomial u = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t j = 2; j <= n; ++j) {
      if (u.exponent(j) == 0) continue;
      for (std::size_t i = 1; i < j; ++i) {
        Monomial v = u.exchanged(i, j);
        if (seen.insert(v).second) frontier.push_back(std::move(v));
      }
    }
  }
  return minimalize(std::vector<Monomial>(seen.begin(), seen.end()), n);
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned long degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> exps(n, 0);
  // Recursive composition enumeration, x_1 exponent descending first.
  std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t var,
                                                            unsigned long left) {
    if (var + 1 == n) {
      exps[var] = static_cast<Exponent>(left);
      out.emplace_back(exps);
      return;
    }
    for (unsigned long e = left + 1; e-- > 0;) {
      exps[var] = static_cast<Exponent>(e);
      rec(var + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

MonomialIdeal graded_component_ideal(const MonomialIdeal& ideal, unsigned long degree) {
  std::unordered_set<Monomial, MonomialHash> found;
  const std::size_t n = ideal.num_vars();
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() > degree) continue;
    for (const Monomial& cofactor : monomials_of_degree(n, degree - g.degree())) {
      found.insert(g * cofactor);
    }
  }
  return minimalize(std::vector<Monomial>(found.begin(), found.end()), n);
}

MonomialIdeal with_extra_vars(const MonomialIdeal& ideal, std::size_t extra) {
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) gens.push_back(g.with_extra_vars(extra));
  return minimalize(std::move(gens), ideal.num_vars() + extra);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  MonomialIdeal ideal() {
    skip_space();
    if (at_end()) return MonomialIdeal::zero(n_);
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end()) return MonomialIdeal::zero(n_);
      pos_ = save;
    }
    std::vector<Monomial> gens;
    gens.push_back(monomial());
    skip_space();
    while (!at_end()) {
      expect(',');
      gens.push_back(monomial());
      skip_space();
    }
    return minimalize(std::move(gens), n_);
  }

  Monomial single() {
    Monomial u = monomial();
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return u;
  }

 private:
  Monomial monomial() {
    std::vector<Exponent> exps(n_, 0);
    factor(exps);
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      factor(exps);
      skip_space();
    }
    return Monomial(std::move(exps));
  }

  void factor(std::vector<Exponent>& exps) {
    skip_space();
    if (at_end()) fail("expected a factor");
    if (peek() == '1') {
      ++pos_;
      return;
    }
    if (peek() != 'x') fail("expected 'x<i>' or '1'");
    ++pos_;
    std::size_t start = pos_;
    unsigned long var = number();
    if (var < 1 || var > n_) {
      pos_ = start;
      fail("variable index " + std::to_string(var) + " outside 1.." + std::to_string(n_));
    }
    unsigned long e = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      e = number();
    }
    exps[var - 1] += static_cast<Exponent>(e);
  }

  unsigned long number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    unsigned long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > 1000000) fail("number too large");
      ++pos_;
    }
    return value;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at position " + std::to_string(pos_ + 1) + ": " + what +
                     " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::size_t n) {
  if (n == 0) throw InputError("variable count must be at least 1");
  return Parser(text, n).ideal();
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  if (n == 0) throw InputError("variable count must be at least 1");
  return Parser(text, n).single();
}

std::string format(const Monomial& u) {
  if (u.is_one()) return "1";
  std::string out;
  for (std::size_t i = 1; i <= u.num_vars(); ++i) {
    Exponent e = u.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string format(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const Monomial& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += format(g);
  }
  return out;
}

}  // namespace mconj
