#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mconj/caps.hpp"
#include "mconj/hilbert.hpp"
#include "mconj/integer.hpp"
#include "mconj/monomial.hpp"

namespace mconj {

/// Graded Betti numbers beta_{i,j} of S/I: i is the homological degree,
/// j the internal degree. Only positive entries are stored.
class BettiTable {
 public:
  explicit BettiTable(std::size_t n) : n_(n) {}

  std::size_t num_vars() const { return n_; }

  /// beta_{i,j} += value. Zero contributions are ignored.
  void add(int i, int j, const Integer& value);
  Integer get(int i, int j) const;

  const std::map<std::pair<int, int>, Integer>& entries() const { return entries_; }

  /// Largest i with an entry.
  int projective_dimension() const;

  /// (shift j, beta_{i,j}) pairs of homological degree i, ascending in j.
  std::vector<std::pair<int, Integer>> row(int i) const;

  /// beta_{0,0} = 1 and nothing else at i = 0, entries positive, and
  /// m_{i+1} >= m_i + 1. Throws ConsistencyError otherwise.
  void validate() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::map<std::pair<int, int>, Integer> entries_;
};

/// Per homological degree i = 1..p, stored 0-based (M[0] is M_1).
struct ShiftSummary {
  std::vector<int> M;
  std::vector<int> m;
  std::vector<int> reg;  // reg_i = M_i - i
  int p = 0;
  int reg_max = 0;       // max over i of reg_i, with reg_0 = 0
};

/// Hochster-type brute force. For every lcm b of a subset of generators,
/// beta_{i,b}(S/I) is the dimension of the reduced (i-2)-homology of the
/// upper Koszul complex {W subset supp(b) squarefree : x^b / x^W in I},
/// computed over Q. Requires I proper and nonzero.
BettiTable betti_oracle(const MonomialIdeal& ideal, const ResourceCaps& caps = {});

/// Eliahou-Kervaire: each u in G(I) of degree j adds C(m(u)-1, i) to
/// beta_{i+1, i+j}(S/I). Requires a stable ideal.
BettiTable betti_ek(const MonomialIdeal& ideal);

enum class BettiRoute { Auto, Oracle, EliahouKervaire };

/// Auto uses Eliahou-Kervaire on stable ideals and the oracle otherwise.
BettiTable betti_table(const MonomialIdeal& ideal, const ResourceCaps& caps = {},
                       BettiRoute route = BettiRoute::Auto);

ShiftSummary shifts(const BettiTable& table);

bool is_pure(const BettiTable& table);
/// m_i >= M_{i-1} for all 2 <= i <= p.
bool is_quasi_pure(const BettiTable& table);

/// sum_i (-1)^i sum_j beta_{i,j} t^j; equals the K-polynomial of S/I.
KPolynomial euler_characteristic(const BettiTable& table);

/// Projective dimension equals codimension.
bool is_cohen_macaulay(const MonomialIdeal& ideal, const ResourceCaps& caps = {});

/// All generators of one degree d and M_i = d + i - 1 for every i.
bool has_linear_resolution(const BettiTable& table);
bool has_linear_resolution(const MonomialIdeal& ideal, const ResourceCaps& caps = {});

/// I_<j> has a linear resolution for every j from the least generator degree
/// up to max(largest generator degree, reg I). Beyond reg I the truncations
/// are linear automatically, so the scan is complete.
bool is_componentwise_linear(const MonomialIdeal& ideal, const ResourceCaps& caps = {});

}  // namespace mconj
