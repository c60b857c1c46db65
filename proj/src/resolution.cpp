#include "mconj/resolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "mconj/errors.hpp"
#include "mconj/linalg.hpp"

namespace mconj {

// ---------------------------------------------------------------------------
// BettiTable

void BettiTable::add(int i, int j, const Integer& value) {
  if (value == 0) return;
  if (value < 0) throw ConsistencyError("negative Betti number contribution");
  entries_[{i, j}] += value;
}

Integer BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Integer(0) : it->second;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [key, value] : entries_) p = std::max(p, key.first);
  return p;
}

std::vector<std::pair<int, Integer>> BettiTable::row(int i) const {
  std::vector<std::pair<int, Integer>> out;
  for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
       it != entries_.end() && it->first.first == i; ++it) {
    out.emplace_back(it->first.second, it->second);
  }
  return out;
}

void BettiTable::validate() const {
  if (get(0, 0) != 1) throw ConsistencyError("Betti table must have beta_{0,0} = 1");
  for (const auto& [key, value] : entries_) {
    if (value <= 0) throw ConsistencyError("Betti table has a non-positive entry");
    if (key.first < 0) throw ConsistencyError("negative homological degree");
    if (key.first == 0 && key.second != 0) {
      throw ConsistencyError("S/I has a single generator in homological degree 0");
    }
  }
  const int p = projective_dimension();
  int previous_min = 0;
  for (int i = 1; i <= p; ++i) {
    auto entries = row(i);
    if (entries.empty()) throw ConsistencyError("gap in homological degrees");
    int current_min = entries.front().first;
    if (current_min < previous_min + 1) {
      throw ConsistencyError("m_" + std::to_string(i) + " = " + std::to_string(current_min) +
                             " violates minimal shift growth");
    }
    previous_min = current_min;
  }
}

// ---------------------------------------------------------------------------
// Oracle: upper Koszul simplicial complexes over the lcm lattice

namespace {

using FaceMask = std::uint32_t;

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, const ResourceCaps& caps) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> order;
  std::vector<Monomial> frontier;
  for (const Monomial& g : ideal.generators()) {
    if (seen.insert(g).second) {
      order.push_back(g);
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    Monomial x = std::move(frontier.back());
    frontier.pop_back();
    for (const Monomial& g : ideal.generators()) {
      Monomial l = x.lcm(g);
      if (seen.insert(l).second) {
        if (seen.size() > caps.max_lcm_lattice) {
          throw ResourceError("lcm lattice exceeds max_lcm_lattice = " +
                              std::to_string(caps.max_lcm_lattice));
        }
        order.push_back(l);
        frontier.push_back(std::move(l));
      }
    }
  }
  return order;
}

// Reduced homology dimensions of the upper Koszul complex at multidegree b,
// indexed by k + 1 for k = -1 .. |supp b| - 1.
std::vector<std::size_t> upper_koszul_homology(const MonomialIdeal& ideal, const Monomial& b,
                                               const ResourceCaps& caps) {
  std::vector<std::size_t> support;
  for (std::size_t v = 1; v <= b.num_vars(); ++v) {
    if (b.exponent(v) > 0) support.push_back(v);
  }
  const std::size_t t = support.size();
  if (t > 24) throw ResourceError("multidegree support too large for the oracle");

  // faces[k + 1] lists faces with k + 1 vertices.
  std::vector<std::vector<FaceMask>> faces(t + 1);
  std::vector<Exponent> exps(b.exponents().begin(), b.exponents().end());
  for (FaceMask w = 0; w < (FaceMask{1} << t); ++w) {
    std::vector<Exponent> reduced = exps;
    for (std::size_t bit = 0; bit < t; ++bit) {
      if (w & (FaceMask{1} << bit)) reduced[support[bit] - 1] -= 1;
    }
    if (ideal.contains(Monomial(std::move(reduced)))) {
      faces[static_cast<std::size_t>(std::popcount(w))].push_back(w);
    }
  }
  for (const auto& level : faces) {
    if (level.size() > caps.max_matrix_dim) {
      throw ResourceError("boundary matrix exceeds max_matrix_dim = " +
                          std::to_string(caps.max_matrix_dim));
    }
  }

  // rank_of[d] = rank of the boundary from faces[d] to faces[d - 1].
  std::vector<std::size_t> rank_of(t + 2, 0);
  for (std::size_t d = 1; d <= t; ++d) {
    const auto& top = faces[d];
    const auto& bottom = faces[d - 1];
    if (top.empty() || bottom.empty()) continue;
    std::unordered_map<FaceMask, std::size_t> index;
    for (std::size_t r = 0; r < bottom.size(); ++r) index[bottom[r]] = r;
    IntMatrix boundary(bottom.size(), top.size());
    for (std::size_t c = 0; c < top.size(); ++c) {
      FaceMask w = top[c];
      int sign = 1;
      for (std::size_t bit = 0; bit < t; ++bit) {
        FaceMask v = FaceMask{1} << bit;
        if (!(w & v)) continue;
        boundary(index.at(w & ~v), c) = sign;
        sign = -sign;
      }
    }
    rank_of[d] = rank_over_rationals(std::move(boundary));
  }

  std::vector<std::size_t> homology(t + 1, 0);
  for (std::size_t d = 0; d <= t; ++d) {
    homology[d] = faces[d].size() - rank_of[d] - rank_of[d + 1];
  }
  return homology;
}

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_unit()) throw InputError(std::string(what) + ": the unit ideal is not proper");
  if (ideal.is_zero()) throw InputError(std::string(what) + ": the zero ideal has no resolution");
}

}  // namespace

BettiTable betti_oracle(const MonomialIdeal& ideal, const ResourceCaps& caps) {
  require_proper_nonzero(ideal, "betti_oracle");
  BettiTable table(ideal.num_vars());
  table.add(0, 0, 1);
  for (const Monomial& b : lcm_lattice(ideal, caps)) {
    auto homology = upper_koszul_homology(ideal, b, caps);
    const int degree = static_cast<int>(b.degree());
    // Reduced H_{i-2} sits at index i - 1.
    for (std::size_t idx = 0; idx < homology.size(); ++idx) {
      table.add(static_cast<int>(idx) + 1, degree, homology[idx]);
    }
  }
  return table;
}

BettiTable betti_ek(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "betti_ek");
  if (!is_stable(ideal)) {
    throw PreconditionError("betti_ek needs a stable ideal, got (" + format(ideal) + ")");
  }
  BettiTable table(ideal.num_vars());
  table.add(0, 0, 1);
  for (const Monomial& u : ideal.generators()) {
    const long m = static_cast<long>(u.max_index());
    const int j = static_cast<int>(u.degree());
    for (long i = 0; i < m; ++i) {
      table.add(static_cast<int>(i) + 1, static_cast<int>(i) + j, binomial(m - 1, i));
    }
  }
  return table;
}

BettiTable betti_table(const MonomialIdeal& ideal, const ResourceCaps& caps, BettiRoute route) {
  switch (route) {
    case BettiRoute::Oracle:
      return betti_oracle(ideal, caps);
    case BettiRoute::EliahouKervaire:
      return betti_ek(ideal);
    case BettiRoute::Auto:
      break;
  }
  if (!ideal.is_unit() && !ideal.is_zero() && is_stable(ideal)) return betti_ek(ideal);
  return betti_oracle(ideal, caps);
}

// ---------------------------------------------------------------------------
// Shifts and predicates

ShiftSummary shifts(const BettiTable& table) {
  ShiftSummary summary;
  summary.p = table.projective_dimension();
  for (int i = 1; i <= summary.p; ++i) {
    auto entries = table.row(i);
    if (entries.empty()) throw ConsistencyError("gap in homological degrees");
    summary.m.push_back(entries.front().first);
    summary.M.push_back(entries.back().first);
    summary.reg.push_back(entries.back().first - i);
    summary.reg_max = std::max(summary.reg_max, entries.back().first - i);
  }
  return summary;
}

bool is_pure(const BettiTable& table) {
  ShiftSummary s = shifts(table);
  return s.M == s.m;
}

bool is_quasi_pure(const BettiTable& table) {
  ShiftSummary s = shifts(table);
  for (std::size_t i = 1; i < s.m.size(); ++i) {
    if (s.m[i] < s.M[i - 1]) return false;
  }
  return true;
}

KPolynomial euler_characteristic(const BettiTable& table) {
  int top = 0;
  for (const auto& [key, value] : table.entries()) top = std::max(top, key.second);
  std::vector<Integer> coeffs(static_cast<std::size_t>(top) + 1, Integer(0));
  for (const auto& [key, value] : table.entries()) {
    if (key.first % 2 == 0) {
      coeffs[static_cast<std::size_t>(key.second)] += value;
    } else {
      coeffs[static_cast<std::size_t>(key.second)] -= value;
    }
  }
  return KPolynomial(std::move(coeffs));
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, const ResourceCaps& caps) {
  require_proper_nonzero(ideal, "is_cohen_macaulay");
  BettiTable table = betti_table(ideal, caps);
  return static_cast<std::size_t>(table.projective_dimension()) == codimension(ideal);
}

bool has_linear_resolution(const BettiTable& table) {
  ShiftSummary s = shifts(table);
  if (s.p == 0) return false;
  auto generators = table.row(1);
  if (generators.size() != 1) return false;
  const int d = generators.front().first;
  for (int i = 1; i <= s.p; ++i) {
    if (s.M[static_cast<std::size_t>(i - 1)] != d + i - 1) return false;
  }
  return true;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const ResourceCaps& caps) {
  require_proper_nonzero(ideal, "has_linear_resolution");
  return has_linear_resolution(betti_table(ideal, caps));
}

bool is_componentwise_linear(const MonomialIdeal& ideal, const ResourceCaps& caps) {
  require_proper_nonzero(ideal, "is_componentwise_linear");
  BettiTable table = betti_table(ideal, caps);
  // reg(I) = reg(S/I) + 1.
  const unsigned long reg_ideal = static_cast<unsigned long>(shifts(table).reg_max) + 1;
  const unsigned long low = ideal.min_degree();
  const unsigned long high = std::max(ideal.max_degree(), reg_ideal);
  for (unsigned long j = low; j <= high; ++j) {
    MonomialIdeal component = graded_component_ideal(ideal, j);
    if (component.size() > caps.max_generators) {
      throw ResourceError("graded component exceeds max_generators = " +
                          std::to_string(caps.max_generators));
    }
    if (component.is_zero()) continue;
    if (!has_linear_resolution(component, caps)) return false;
  }
  return true;
}

}  // namespace mconj
