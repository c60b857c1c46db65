#include "mconj/report.hpp"

namespace mconj {

namespace {

Json fit_json(const LinearFit& fit) {
  Json j;
  j["q"] = fit.q;
  j["c"] = fit.c;
  j["k0"] = fit.k0;
  j["exact"] = fit.exact;
  return j;
}

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

Json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(value.get_si());
  return Json(to_string(value));
}

Json rational_json(const Rational& value) {
  Json j;
  j["exact"] = to_string(value);
  j["decimal"] = to_decimal(value);
  return j;
}

Json to_json(const KPolynomial& k) {
  Json j = Json::array();
  for (const Integer& c : k.coefficients()) j.push_back(integer_json(c));
  return j;
}

Json to_json(const BettiTable& table) {
  Json j = Json::array();
  for (const auto& [key, value] : table.entries()) {
    j.push_back(Json::array({key.first, key.second, integer_json(value)}));
  }
  return j;
}

Json to_json(const ShiftSummary& summary) {
  Json j;
  j["M"] = summary.M;
  j["m"] = summary.m;
  j["reg"] = summary.reg;
  j["p"] = summary.p;
  j["reg_max"] = summary.reg_max;
  return j;
}

Json to_json(const HilbertData& data) {
  Json j;
  j["k"] = to_json(data.k);
  j["q"] = to_json(data.q);
  j["codim"] = data.codim;
  j["dim"] = data.dim;
  j["multiplicity"] = integer_json(data.multiplicity);
  return j;
}

Json to_json(const ConjectureReport& report) {
  Json flags;
  flags["cm"] = report.flags.cm;
  flags["pure"] = report.flags.pure;
  flags["quasi_pure"] = report.flags.quasi_pure;
  flags["conj1_holds"] = optional_json(report.flags.conj1_holds);
  flags["conj2_holds"] = report.flags.conj2_holds;
  flags["tight_lower"] = optional_json(report.flags.tight_lower);
  flags["tight_upper"] = report.flags.tight_upper;
  flags["improved_ok"] = report.flags.improved_ok;

  Json j;
  j["ideal"] = format(report.ideal);
  j["n"] = report.ideal.num_vars();
  j["e"] = integer_json(report.e);
  j["s"] = report.s;
  j["p"] = report.p;
  j["lower_cm"] = report.lower_cm ? rational_json(*report.lower_cm) : Json(nullptr);
  j["upper_codim"] = rational_json(report.upper_codim);
  j["flags"] = flags;
  j["k"] = to_json(report.k);
  j["betti"] = to_json(report.betti);
  j["shift_summary"] = to_json(report.shift_summary);
  j["counterexample_candidate"] = report.counterexample_candidate;
  return j;
}

Json to_json(const VandermondeCertificate& cert) {
  Json j;
  j["SA"] = integer_json(cert.SA);
  j["SB"] = integer_json(cert.SB);
  j["s"] = cert.s;
  j["e"] = integer_json(cert.e);
  j["quasi_pure"] = cert.quasi_pure;
  j["pure"] = cert.pure;
  j["lower_value"] = integer_json(cert.lower_value);
  j["middle_value"] = integer_json(cert.middle_value);
  j["upper_value"] = integer_json(cert.upper_value);
  j["lower_tight"] = cert.lower_tight;
  j["upper_tight"] = cert.upper_tight;
  j["sandwich_consistent"] = cert.sandwich_consistent;
  return j;
}

Json to_json(const DegreeMatrix& matrix) {
  Json j;
  j["m"] = matrix.rows();
  j["n"] = matrix.cols();
  j["r"] = matrix.r();
  j["orientation"] = matrix.orientation() == Orientation::Standard ? "standard" : "reversed";
  j["u"] = matrix.u_array();
  j["a"] = optional_json(matrix.a());
  j["b"] = optional_json(matrix.b());
  return j;
}

Json to_json(const DeterminantalBounds& bounds) {
  Json j;
  j["e"] = integer_json(bounds.e);
  j["M"] = bounds.shifts.M;
  j["m"] = bounds.shifts.m;
  j["scaled_e"] = integer_json(bounds.scaled_e);
  j["upper_product"] = integer_json(bounds.upper_product);
  j["lower_product"] = integer_json(bounds.lower_product);
  j["upper_slack"] = integer_json(bounds.upper_slack);
  j["lower_slack"] = integer_json(bounds.lower_slack);
  j["upper_holds"] = bounds.upper_holds;
  j["lower_holds"] = bounds.lower_holds;
  j["tight_upper"] = bounds.tight_upper;
  j["tight_lower"] = bounds.tight_lower;
  j["pure"] = bounds.pure;
  j["all_equal"] = bounds.all_equal;
  j["tightness_consistent"] = bounds.tightness_consistent;
  return j;
}

Json to_json(const ShiftProfile& profile) {
  Json j;
  j["s"] = profile.s;
  j["M"] = profile.M;
  j["m"] = profile.m;
  j["e"] = integer_json(profile.e);
  j["satisfies_bounds"] = profile.satisfies_bounds();
  j["lower_tight"] = profile.lower_tight();
  j["upper_tight"] = profile.upper_tight();
  return j;
}

Json to_json(const ExtensionTrace& trace) {
  Json j;
  Json steps = Json::array();
  for (const ShiftProfile& p : trace.steps) steps.push_back(to_json(p));
  j["steps"] = steps;
  j["step_ok"] = trace.step_ok;
  j["ok"] = trace.ok;
  return j;
}

Json to_json(const PowerScan& scan) {
  Json j;
  j["base"] = format(scan.base);
  j["n"] = scan.base.num_vars();
  j["kmax"] = scan.kmax;
  j["s"] = scan.s;
  Json steps = Json::array();
  for (const PowerStep& st : scan.steps) {
    Json row;
    row["k"] = st.k;
    row["num_generators"] = st.num_generators;
    row["s"] = st.s;
    row["e"] = integer_json(st.e);
    row["M"] = st.M;
    row["m"] = st.m;
    row["reg"] = st.reg;
    row["ratio"] = rational_json(st.ratio);
    steps.push_back(row);
  }
  j["steps"] = steps;
  j["truncated"] = scan.truncated;
  j["truncation_reason"] = scan.truncation_reason;
  return j;
}

Json to_json(const SlopeReport& report) {
  Json j;
  j["status"] = to_string(report.status);
  Json fits = Json::array();
  for (const LinearFit& f : report.fits) fits.push_back(fit_json(f));
  j["fits"] = fits;
  j["reg_fit"] = fit_json(report.reg_fit);
  j["q0"] = report.q0;
  j["slopes_equal"] = report.slopes_equal;
  j["c_min"] = report.c_min;
  j["c_max"] = report.c_max;
  j["regularity_monotone"] = report.regularity_monotone;
  return j;
}

Json to_json(const AsymptoticMultiplicity& asym) {
  Json j;
  j["status"] = to_string(asym.status);
  j["e_IS"] = integer_json(asym.e_IS);
  j["onset"] = asym.onset;
  j["q"] = asym.q;
  j["q_power_s"] = integer_json(asym.q_power_s);
  j["bound_holds"] = asym.bound_holds;
  return j;
}

Json to_json(const LimitRatioReport& report) {
  Json j;
  Json ratios = Json::array();
  for (const Rational& r : report.ratios) ratios.push_back(rational_json(r));
  j["ratios"] = ratios;
  j["tail_start"] = report.tail_start;
  j["tail_at_most_one"] = report.tail_at_most_one;
  j["all_at_most_one"] = report.all_at_most_one;
  j["fitted_limit"] = report.fitted_limit ? rational_json(*report.fitted_limit) : Json(nullptr);
  return j;
}

Json to_json(const FuzzSummary& summary) {
  Json j;
  j["count"] = summary.count;
  j["holds"] = summary.holds;
  j["tight"] = summary.tight;
  j["pure"] = summary.pure;
  j["cm"] = summary.cm;
  j["violations"] = summary.violations;
  return j;
}

Json to_json(const FuzzResult& result) {
  Json config;
  config["n"] = result.config.n;
  config["maxdeg"] = result.config.maxdeg;
  config["count"] = result.config.count;
  config["seed"] = result.config.seed;
  Json j;
  j["config"] = config;
  j["summary"] = to_json(result.summary);
  Json reports = Json::array();
  for (const ConjectureReport& r : result.reports) reports.push_back(to_json(r));
  j["reports"] = reports;
  return j;
}

std::string render(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace mconj
