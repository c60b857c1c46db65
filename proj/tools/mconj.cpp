// Command-line front end for the multiplicity-bound toolkit.
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mconj/bounds.hpp"
#include "mconj/caps.hpp"
#include "mconj/determinantal.hpp"
#include "mconj/errors.hpp"
#include "mconj/fuzz.hpp"
#include "mconj/hilbert.hpp"
#include "mconj/monomial.hpp"
#include "mconj/powers.hpp"
#include "mconj/regseq.hpp"
#include "mconj/report.hpp"
#include "mconj/resolution.hpp"

namespace {

using mconj::Json;

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitCandidate = 2;

struct Options {
  std::size_t n = 0;
  std::string ideal;
  std::string route = "auto";
  unsigned kmax = mconj::kDefaultKmax;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  unsigned maxdeg = 4;
  unsigned threads = 0;
  std::size_t cap_lcm = 0;
  std::string out;
  std::string u;
  std::string a;
  std::string b;
  std::string M;
  std::string m;
  std::string e = "1";
  int s = -1;
  std::string degrees;
};

std::vector<long> parse_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw mconj::InputError(std::string("empty entry in ") + what);
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw mconj::InputError(std::string("bad integer '") + item + "' in " + what);
    }
    out.push_back(value);
  }
  return out;
}

std::vector<std::vector<long>> parse_rows(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::stringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) rows.push_back(parse_list(row, "--u"));
  return rows;
}

mconj::BettiRoute parse_route(const std::string& route) {
  if (route == "auto") return mconj::BettiRoute::Auto;
  if (route == "oracle") return mconj::BettiRoute::Oracle;
  if (route == "ek") return mconj::BettiRoute::EliahouKervaire;
  throw mconj::InputError("unknown route '" + route + "' (use auto, oracle or ek)");
}

mconj::MonomialIdeal require_ideal(const Options& opt) {
  if (opt.n == 0) throw mconj::InputError("-n/--vars is required and must be positive");
  return mconj::parse_ideal(opt.ideal, opt.n);
}

/// Writes via a temporary file in the target directory and renames it into
/// place, so a reader never sees a partial report.
void emit(const Json& json, const std::string& path) {
  const std::string text = mconj::render(json);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw mconj::InputError("cannot open " + tmp.string() + " for writing");
    file << text;
    file.flush();
    if (!file) {
      std::filesystem::remove(tmp);
      throw mconj::InputError("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw mconj::InputError("cannot move report to " + path + ": " + ec.message());
  }
}

int cmd_check(const Options& opt, const mconj::ResourceCaps& caps) {
  const mconj::MonomialIdeal ideal = require_ideal(opt);
  const mconj::ConjectureReport report = mconj::check_improved(ideal, caps, parse_route(opt.route));
  Json j;
  j["command"] = "check";
  j["report"] = mconj::to_json(report);
  if (report.flags.cm) {
    j["vandermonde"] = mconj::to_json(mconj::vandermonde_certificate(report.betti, report.e));
  }
  emit(j, opt.out);
  return report.counterexample_candidate ? kExitCandidate : kExitClean;
}

int cmd_betti(const Options& opt, const mconj::ResourceCaps& caps) {
  const mconj::MonomialIdeal ideal = require_ideal(opt);
  const mconj::BettiTable table = mconj::betti_table(ideal, caps, parse_route(opt.route));
  table.validate();
  Json j;
  j["command"] = "betti";
  j["ideal"] = mconj::format(ideal);
  j["n"] = ideal.num_vars();
  j["betti"] = mconj::to_json(table);
  j["shift_summary"] = mconj::to_json(mconj::shifts(table));
  j["pure"] = mconj::is_pure(table);
  j["quasi_pure"] = mconj::is_quasi_pure(table);
  j["stable"] = mconj::is_stable(ideal);
  j["strongly_stable"] = mconj::is_strongly_stable(ideal);
  emit(j, opt.out);
  return kExitClean;
}

int cmd_hilbert(const Options& opt) {
  const mconj::MonomialIdeal ideal = require_ideal(opt);
  Json j;
  j["command"] = "hilbert";
  j["ideal"] = mconj::format(ideal);
  j["n"] = ideal.num_vars();
  j["hilbert"] = mconj::to_json(mconj::hilbert_data(ideal));
  emit(j, opt.out);
  return kExitClean;
}

int cmd_fuzz(const Options& opt, const mconj::ResourceCaps& caps) {
  mconj::FuzzConfig config;
  config.n = opt.n == 0 ? 3 : opt.n;
  config.maxdeg = opt.maxdeg;
  config.count = opt.count;
  config.seed = opt.seed;
  config.caps = caps;
  config.threads = opt.threads;
  const mconj::FuzzResult result = mconj::run_fuzz(config);
  Json j;
  j["command"] = "fuzz";
  j["result"] = mconj::to_json(result);
  emit(j, opt.out);
  return result.summary.violations > 0 ? kExitCandidate : kExitClean;
}

int cmd_det(const Options& opt) {
  const bool have_u = !opt.u.empty();
  const bool have_ab = !opt.a.empty() || !opt.b.empty();
  if (have_u == have_ab) throw mconj::InputError("det needs either --u or both --a and --b");
  const mconj::DegreeMatrix dm =
      have_u ? mconj::DegreeMatrix::from_u(parse_rows(opt.u))
             : mconj::DegreeMatrix::from_degree_sequences(parse_list(opt.a, "--a"), parse_list(opt.b, "--b"));
  const mconj::DeterminantalBounds bounds = mconj::check_bounds(dm);
  Json j;
  j["command"] = "det";
  j["matrix"] = mconj::to_json(dm);
  j["bounds"] = mconj::to_json(bounds);
  emit(j, opt.out);
  const bool proved = bounds.upper_holds && bounds.lower_holds && bounds.tightness_consistent;
  return proved ? kExitClean : kExitCandidate;
}

int cmd_powers(const Options& opt, const mconj::ResourceCaps& caps) {
  const mconj::MonomialIdeal ideal = require_ideal(opt);
  const mconj::PowerScan scan = mconj::power_scan(ideal, opt.kmax, caps);
  Json j;
  j["command"] = "powers";
  j["scan"] = mconj::to_json(scan);
  bool violated = false;
  if (scan.steps.size() >= 3) {
    const auto slopes = mconj::slope_equality_check(scan);
    const auto asym = mconj::asymptotic_multiplicity(scan);
    j["slopes"] = mconj::to_json(slopes);
    j["asymptotic_multiplicity"] = mconj::to_json(asym);
    j["limit_ratio"] = mconj::to_json(mconj::limit_ratio_report(scan));
    violated = slopes.status == mconj::ScanStatus::Violated || asym.status == mconj::ScanStatus::Violated;
  }
  emit(j, opt.out);
  return violated ? kExitCandidate : kExitClean;
}

int cmd_regseq(const Options& opt) {
  mconj::ShiftProfile profile;
  profile.M = parse_list(opt.M, "--M");
  profile.m = opt.m.empty() ? profile.M : parse_list(opt.m, "--m");
  profile.s = opt.s < 0 ? static_cast<int>(profile.M.size()) : opt.s;
  try {
    profile.e = mconj::Integer(opt.e);
  } catch (const std::invalid_argument&) {
    throw mconj::InputError("bad integer '" + opt.e + "' in --e");
  }
  const std::vector<long> degrees = parse_list(opt.degrees, "--degrees");
  const mconj::ExtensionTrace trace = mconj::verify_extension(profile, degrees);
  Json j;
  j["command"] = "regseq";
  j["trace"] = mconj::to_json(trace);
  j["tight_extension"] = trace.steps.back().upper_tight();
  j["tightness_condition"] = mconj::tightness_condition(profile, degrees);
  emit(j, opt.out);
  return trace.ok ? kExitClean : kExitCandidate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicity bounds for graded algebras: exact checks on monomial ideals, "
               "determinantal degree data, regular sequences and powers."};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--cap-lcm", opt.cap_lcm, "Cap on lcm-lattice size (overrides MCONJ_CAP_LCM)");
  app.add_option("--out", opt.out, "Write the report to this file atomically instead of stdout");

  const auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("-n,--vars", opt.n, "Number of variables")->required();
    sub->add_option("ideal", opt.ideal, "Generators, e.g. \"x1^2, x1*x2\"")->required();
  };
  const auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--cap-lcm", opt.cap_lcm, "Cap on lcm-lattice size");
    sub->add_option("--out", opt.out, "Output file");
  };

  CLI::App* check = app.add_subcommand("check", "Multiplicity conjecture report for an ideal");
  add_ideal(check);
  check->add_option("--route", opt.route, "Betti route: auto, oracle or ek");
  CLI::App* betti = app.add_subcommand("betti", "Graded Betti table of S/I");
  add_ideal(betti);
  betti->add_option("--route", opt.route, "Betti route: auto, oracle or ek");
  CLI::App* hilbert = app.add_subcommand("hilbert", "K-polynomial, codimension and multiplicity");
  add_ideal(hilbert);
  CLI::App* fuzz = app.add_subcommand("fuzz", "Check random strongly stable ideals");
  fuzz->add_option("-n,--vars", opt.n, "Number of variables (default 3)");
  fuzz->add_option("--seed", opt.seed, "Random seed");
  fuzz->add_option("--count", opt.count, "Number of ideals");
  fuzz->add_option("--maxdeg", opt.maxdeg, "Largest seed degree");
  fuzz->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  CLI::App* det = app.add_subcommand("det", "Bounds for an ideal of maximal minors");
  det->add_option("--u", opt.u, "u-array, rows separated by ';', e.g. \"1,1;1,1\"");
  det->add_option("--a", opt.a, "Column degrees a_1 <= ... <= a_n");
  det->add_option("--b", opt.b, "Row degrees b_1 <= ... <= b_m");
  CLI::App* powers = app.add_subcommand("powers", "Scan the powers I^k");
  add_ideal(powers);
  powers->add_option("--kmax", opt.kmax, "Largest power (at least 3)");
  CLI::App* regseq = app.add_subcommand("regseq", "Extend a shift profile by a regular sequence");
  regseq->add_option("--M", opt.M, "Maximal shifts M_1,...,M_q")->required();
  regseq->add_option("--m", opt.m, "Minimal shifts m_1,...,m_q (default: M)");
  regseq->add_option("--e", opt.e, "Multiplicity");
  regseq->add_option("--s", opt.s, "Codimension (default: q)");
  regseq->add_option("--degrees", opt.degrees, "Degrees of the regular elements")->required();
  for (CLI::App* sub : {check, betti, hilbert, fuzz, det, powers, regseq}) add_globals(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitClean : kExitError;
  }

  try {
    mconj::ResourceCaps caps = mconj::ResourceCaps::from_env();
    if (opt.cap_lcm > 0) caps.max_lcm_lattice = opt.cap_lcm;
    if (check->parsed()) return cmd_check(opt, caps);
    if (betti->parsed()) return cmd_betti(opt, caps);
    if (hilbert->parsed()) return cmd_hilbert(opt);
    if (fuzz->parsed()) return cmd_fuzz(opt, caps);
    if (det->parsed()) return cmd_det(opt);
    if (powers->parsed()) return cmd_powers(opt, caps);
    if (regseq->parsed()) return cmd_regseq(opt);
  } catch (const mconj::Error& err) {
    std::cerr << "mconj: " << err.what() << "\n";
    return kExitError;
  } catch (const std::exception& err) {
    std::cerr << "mconj: unexpected failure: " << err.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
