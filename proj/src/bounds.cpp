#include "mconj/bounds.hpp"

#include "mconj/errors.hpp"

namespace mconj {

namespace {

Integer product_prefix(const std::vector<int>& values, int count) {
  Integer out = 1;
  for (int i = 0; i < count; ++i) out *= values[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

ConjectureReport check_conjectures(const MonomialIdeal& ideal, const ResourceCaps& caps,
                                   BettiRoute route) {
  if (ideal.is_unit() || ideal.is_zero()) {
    throw InputError("check_conjectures needs a proper nonzero ideal, got (" + format(ideal) + ")");
  }
  HilbertData hilbert = hilbert_data(ideal);
  BettiTable table = betti_table(ideal, caps, route);
  table.validate();
  if (euler_characteristic(table) != hilbert.k) {
    throw ConsistencyError("Betti table and K-polynomial disagree for (" + format(ideal) + ")");
  }
  ShiftSummary sh = shifts(table);

  ConjectureReport report{ideal, hilbert.multiplicity, static_cast<int>(hilbert.codim),
                          sh.p, std::nullopt, Rational(0), {}, hilbert.k, table, sh, false};
  const int s = report.s;
  const int p = report.p;
  if (p < s) throw ConsistencyError("projective dimension below codimension");

  const Integer s_fact_e = factorial(static_cast<unsigned long>(s)) * report.e;
  const Integer upper_prod = product_prefix(sh.M, s);
  report.upper_codim = Rational(upper_prod, factorial(static_cast<unsigned long>(s)));
  report.upper_codim.canonicalize();

  ConjectureFlags& f = report.flags;
  f.cm = (p == s);
  f.pure = (sh.M == sh.m);
  f.quasi_pure = is_quasi_pure(table);
  f.conj2_holds = s_fact_e <= upper_prod;
  f.tight_upper = s_fact_e == upper_prod;
  if (f.cm) {
    const Integer p_fact_e = factorial(static_cast<unsigned long>(p)) * report.e;
    const Integer lower_prod = product_prefix(sh.m, p);
    const Integer upper_p = product_prefix(sh.M, p);
    report.lower_cm = Rational(lower_prod, factorial(static_cast<unsigned long>(p)));
    report.lower_cm->canonicalize();
    f.conj1_holds = lower_prod <= p_fact_e && p_fact_e <= upper_p;
    f.tight_lower = lower_prod == p_fact_e;
  }
  const bool any_tight = f.tight_upper || f.tight_lower.value_or(false);
  f.improved_ok = !any_tight || (f.pure && f.cm);
  return report;
}

ConjectureReport check_improved(const MonomialIdeal& ideal, const ResourceCaps& caps,
                                BettiRoute route) {
  ConjectureReport report = check_conjectures(ideal, caps, route);
  const ConjectureFlags& f = report.flags;
  report.counterexample_candidate =
      !f.improved_ok || !f.conj2_holds || (f.conj1_holds.has_value() && !*f.conj1_holds);
  return report;
}

bool huneke_miller_check(const BettiTable& table, const Integer& e) {
  if (!is_pure(table)) throw PreconditionError("huneke_miller_check needs a pure resolution");
  const int p = table.projective_dimension();
  const std::size_t s = root_multiplicity_at_one(euler_characteristic(table));
  if (static_cast<std::size_t>(p) != s) {
    throw PreconditionError("huneke_miller_check needs a Cohen-Macaulay table (p = " +
                            std::to_string(p) + ", codim = " + std::to_string(s) + ")");
  }
  ShiftSummary sh = shifts(table);
  return factorial(static_cast<unsigned long>(p)) * e == product_prefix(sh.M, p);
}

VandermondeCertificate vandermonde_certificate(const BettiTable& table, const Integer& e) {
  const int p = table.projective_dimension();
  const std::size_t codim = root_multiplicity_at_one(euler_characteristic(table));
  if (static_cast<std::size_t>(p) != codim) {
    throw PreconditionError("vandermonde_certificate needs a Cohen-Macaulay table (p = " +
                            std::to_string(p) + ", codim = " + std::to_string(codim) + ")");
  }
  const int s = p;
  std::vector<std::vector<std::pair<int, Integer>>> rows;
  for (int i = 1; i <= s; ++i) rows.push_back(table.row(i));

  VandermondeCertificate cert;
  cert.s = s;
  cert.e = e;
  cert.SA = 0;
  cert.SB = 0;

  // Odometer over one distinct shift per row; the Betti numbers are the
  // multiplicities of each choice.
  std::vector<std::size_t> pick(static_cast<std::size_t>(s), 0);
  std::vector<int> chosen(static_cast<std::size_t>(s));
  while (true) {
    Integer weight = 1;
    Integer shift_product = 1;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      const auto& [shift, beta] = rows[i][pick[i]];
      chosen[i] = shift;
      weight *= beta;
      shift_product *= shift;
    }
    Integer vandermonde = 1;
    for (std::size_t a = 0; a < chosen.size(); ++a) {
      for (std::size_t b = a + 1; b < chosen.size(); ++b) vandermonde *= chosen[b] - chosen[a];
    }
    cert.SB += weight * vandermonde;
    cert.SA += weight * shift_product * vandermonde;

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == rows[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }

  const Integer s_fact_e = factorial(static_cast<unsigned long>(s)) * e;
  if (cert.SA != s_fact_e * cert.SB) {
    throw ConsistencyError("Vandermonde identity fails: SA = " + cert.SA.get_str() +
                           ", s! e SB = " + Integer(s_fact_e * cert.SB).get_str());
  }

  ShiftSummary sh = shifts(table);
  cert.pure = (sh.M == sh.m);
  cert.quasi_pure = is_quasi_pure(table);
  cert.lower_value = product_prefix(sh.m, s) * cert.SB;
  cert.middle_value = cert.SA;
  cert.upper_value = product_prefix(sh.M, s) * cert.SB;
  cert.lower_tight = cert.lower_value == cert.middle_value;
  cert.upper_tight = cert.upper_value == cert.middle_value;
  if (cert.quasi_pure) {
    cert.sandwich_consistent = cert.SB > 0 && cert.lower_value <= cert.middle_value &&
                               cert.middle_value <= cert.upper_value &&
                               cert.lower_tight == cert.pure && cert.upper_tight == cert.pure;
  }
  return cert;
}

}  // namespace mconj
