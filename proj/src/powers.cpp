#include "mconj/powers.hpp"

#include <algorithm>

#include "mconj/errors.hpp"
#include "mconj/hilbert.hpp"

namespace mconj {

namespace {

PowerStep analyse_power(const MonomialIdeal& power_ideal, unsigned k, const ResourceCaps& caps) {
  PowerStep step;
  step.k = k;
  step.num_generators = power_ideal.size();
  HilbertData hilbert = hilbert_data(power_ideal);
  step.s = static_cast<unsigned>(hilbert.codim);
  step.e = hilbert.multiplicity;
  BettiTable table = betti_table(power_ideal, caps);
  table.validate();
  if (euler_characteristic(table) != hilbert.k) {
    throw ConsistencyError("Betti table of I^" + std::to_string(k) + " disagrees with K(t)");
  }
  ShiftSummary sh = shifts(table);
  if (sh.p < static_cast<int>(step.s)) throw ConsistencyError("projective dimension below codimension");
  step.M = sh.M;
  step.m = sh.m;
  step.reg = sh.reg;
  Integer prod = 1;
  for (unsigned i = 0; i < step.s; ++i) prod *= step.M[i];
  step.ratio = Rational(factorial(step.s) * step.e, prod);
  step.ratio.canonicalize();
  return step;
}

}  // namespace

PowerScan power_scan(const MonomialIdeal& ideal, unsigned kmax, const ResourceCaps& caps) {
  if (ideal.is_unit() || ideal.is_zero()) {
    throw InputError("power_scan needs a proper nonzero ideal");
  }
  if (kmax < 3) throw InputError("power_scan needs kmax >= 3");
  PowerScan scan{ideal, kmax, 0, {}, false, {}};
  MonomialIdeal current = ideal;
  for (unsigned k = 1; k <= kmax; ++k) {
    try {
      if (k > 1) current = product(current, ideal);
      if (current.size() > caps.max_generators) {
        throw ResourceError("I^" + std::to_string(k) + " exceeds max_generators = " +
                            std::to_string(caps.max_generators));
      }
      PowerStep step = analyse_power(current, k, caps);
      if (k == 1) {
        scan.s = step.s;
      } else if (step.s != scan.s) {
        throw ConsistencyError("codimension of I^" + std::to_string(k) + " differs from I");
      }
      scan.steps.push_back(std::move(step));
    } catch (const ResourceError& err) {
      scan.truncated = true;
      scan.truncation_reason = "k = " + std::to_string(k) + ": " + err.what();
      break;
    }
  }
  return scan;
}

std::vector<long> ideal_regularities(const PowerStep& step) {
  std::vector<long> out;
  for (std::size_t i = 0; i < step.M.size(); ++i) {
    out.push_back(static_cast<long>(step.M[i]) - static_cast<long>(i));
  }
  return out;
}

LinearFit fit_linear(std::span<const long> values) {
  LinearFit fit;
  const std::size_t len = values.size();
  if (len < 3) return fit;
  const long q = values[len - 1] - values[len - 2];
  std::size_t start = len - 2;  // 0-based index where the affine tail begins
  while (start > 0 && values[start] - values[start - 1] == q) --start;
  const std::size_t tail = len - start;
  if (tail < 3) return fit;
  fit.q = q;
  fit.k0 = static_cast<unsigned>(start + 1);
  fit.c = values[start] - q * static_cast<long>(fit.k0);
  fit.exact = true;
  return fit;
}

const char* to_string(ScanStatus status) {
  switch (status) {
    case ScanStatus::Consistent:
      return "consistent";
    case ScanStatus::Violated:
      return "violated";
    case ScanStatus::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

bool regularity_monotone(const ShiftSummary& summary, unsigned s) {
  int previous = 0;
  for (unsigned i = 1; i <= s && i <= summary.reg.size(); ++i) {
    if (summary.reg[i - 1] < previous) return false;
    previous = summary.reg[i - 1];
  }
  return true;
}

SlopeReport slope_equality_check(const PowerScan& scan) {
  SlopeReport report;
  report.regularity_monotone = std::all_of(scan.steps.begin(), scan.steps.end(), [&](const PowerStep& st) {
    ShiftSummary sh;
    sh.reg = st.reg;
    return regularity_monotone(sh, scan.s);
  });
  if (scan.steps.size() < 3) return report;

  std::vector<long> overall;
  for (const PowerStep& st : scan.steps) {
    auto regs = ideal_regularities(st);
    overall.push_back(*std::max_element(regs.begin(), regs.end()));
  }
  report.reg_fit = fit_linear(overall);

  // s = 0 cannot occur for a proper nonzero ideal; i = 0 is always checked.
  const unsigned count = std::max(scan.s, 1U);
  bool all_exact = report.reg_fit.exact;
  for (unsigned i = 0; i < count; ++i) {
    std::vector<long> series;
    for (const PowerStep& st : scan.steps) series.push_back(ideal_regularities(st)[i]);
    report.fits.push_back(fit_linear(series));
    all_exact = all_exact && report.fits.back().exact;
  }
  if (!all_exact) {
    report.status = report.regularity_monotone ? ScanStatus::Inconclusive : ScanStatus::Violated;
    return report;
  }
  report.q0 = report.fits.front().q;
  report.c_min = report.c_max = report.fits.front().c;
  report.slopes_equal = report.reg_fit.q == report.q0;
  for (const LinearFit& f : report.fits) {
    report.slopes_equal = report.slopes_equal && f.q == report.q0;
    report.c_min = std::min(report.c_min, f.c);
    report.c_max = std::max(report.c_max, f.c);
  }
  report.status = report.slopes_equal && report.regularity_monotone ? ScanStatus::Consistent
                                                                    : ScanStatus::Violated;
  return report;
}

AsymptoticMultiplicity asymptotic_multiplicity(const PowerScan& scan) {
  AsymptoticMultiplicity out;
  const std::size_t len = scan.steps.size();
  const unsigned s = scan.s;
  if (len < s + 2) return out;

  std::vector<Integer> diffs;
  for (const PowerStep& st : scan.steps) diffs.push_back(st.e);
  for (unsigned order = 0; order < s; ++order) {
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  // diffs[i] is the s-th difference starting at k = i + 1.
  std::size_t start = diffs.size() - 1;
  while (start > 0 && diffs[start - 1] == diffs.back()) --start;
  if (diffs.size() - start < 2) return out;

  std::vector<long> reg0;
  for (const PowerStep& st : scan.steps) reg0.push_back(st.M.front());
  LinearFit q_fit = fit_linear(reg0);
  if (!q_fit.exact) return out;

  out.e_IS = diffs.back();
  out.onset = static_cast<unsigned>(start + 1);
  out.q = q_fit.q;
  mpz_pow_ui(out.q_power_s.get_mpz_t(), Integer(out.q).get_mpz_t(), s);
  out.bound_holds = out.e_IS <= out.q_power_s;
  out.status = out.bound_holds ? ScanStatus::Consistent : ScanStatus::Violated;
  return out;
}

LimitRatioReport limit_ratio_report(const PowerScan& scan) {
  if (scan.steps.size() < 3) throw PreconditionError("limit_ratio_report needs at least 3 powers");
  LimitRatioReport out;
  for (const PowerStep& st : scan.steps) out.ratios.push_back(st.ratio);

  AsymptoticMultiplicity asym = asymptotic_multiplicity(scan);
  std::vector<long> reg0;
  for (const PowerStep& st : scan.steps) reg0.push_back(st.M.front());
  LinearFit q_fit = fit_linear(reg0);
  if (asym.status != ScanStatus::Inconclusive && q_fit.exact) {
    out.tail_start = std::max(asym.onset, q_fit.k0);
    out.fitted_limit = Rational(asym.e_IS, asym.q_power_s);
    out.fitted_limit->canonicalize();
  } else {
    out.tail_start = static_cast<unsigned>(scan.steps.size()) - 2;
  }
  const Rational one(1);
  out.all_at_most_one = std::all_of(out.ratios.begin(), out.ratios.end(),
                                    [&](const Rational& r) { return r <= one; });
  out.tail_at_most_one = std::all_of(out.ratios.begin() + (out.tail_start - 1), out.ratios.end(),
                                     [&](const Rational& r) { return r <= one; });
  return out;
}

}  // namespace mconj
