// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. All comparisons are exact.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mconj/bounds.hpp"
#include "mconj/determinantal.hpp"
#include "mconj/errors.hpp"
#include "mconj/fuzz.hpp"
#include "mconj/hilbert.hpp"
#include "mconj/powers.hpp"
#include "mconj/regseq.hpp"
#include "mconj/resolution.hpp"

using namespace mconj;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

// ---------------------------------------------------------------------------
// Corpus: seeded random strongly stable ideals plus every Borel ideal
// generated in degree <= 3 in at most 3 variables.

/// Degree-d monomial sets closed under the Borel moves that contain every
/// x_i multiple of `below`.
std::vector<std::vector<Monomial>> borel_layers(std::size_t n, unsigned d, const std::vector<Monomial>& below) {
  const std::vector<Monomial> all = monomials_of_degree(n, d);
  std::vector<std::vector<Monomial>> out;
  const auto index_of = [&](const Monomial& u) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] == u) return i;
    }
    return all.size();
  };
  unsigned long required = 0;
  for (const Monomial& b : below) {
    for (std::size_t v = 1; v <= n; ++v) required |= 1UL << index_of(b * Monomial::variable(n, v));
  }
  for (unsigned long mask = 0; mask < (1UL << all.size()); ++mask) {
    if ((mask & required) != required) continue;
    bool closed = true;
    for (std::size_t a = 0; a < all.size() && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t j = 2; j <= n && closed; ++j) {
        if (all[a].exponent(j) == 0) continue;
        for (std::size_t i = 1; i < j && closed; ++i) closed = mask >> index_of(all[a].exchanged(i, j)) & 1;
      }
    }
    if (!closed) continue;
    std::vector<Monomial> layer;
    for (std::size_t a = 0; a < all.size(); ++a) {
      if (mask >> a & 1) layer.push_back(all[a]);
    }
    out.push_back(layer);
  }
  return out;
}

std::vector<MonomialIdeal> exhaustive_borel(std::size_t n, unsigned top) {
  std::vector<MonomialIdeal> out;
  std::function<void(unsigned, std::vector<Monomial>, std::vector<Monomial>)> grow =
      [&](unsigned d, std::vector<Monomial> gens, std::vector<Monomial> previous) {
        if (d > top) {
          if (!gens.empty()) out.push_back(minimalize(gens, n));
          return;
        }
        for (const auto& layer : borel_layers(n, d, previous)) {
          std::vector<Monomial> next = gens;
          next.insert(next.end(), layer.begin(), layer.end());
          grow(d + 1, next, layer);
        }
      };
  grow(1, {}, {});
  return out;
}

std::vector<MonomialIdeal> build_corpus(std::size_t& random_count, std::size_t& borel_count) {
  std::vector<MonomialIdeal> corpus;
  for (std::size_t n = 1; n <= 4; ++n) {
    FuzzConfig config;
    config.n = n;
    config.maxdeg = 4;
    config.count = 25;
    config.seed = 1000 + n;
    for (auto& ideal : generate_fuzz_ideals(config)) corpus.push_back(std::move(ideal));
  }
  random_count = corpus.size();
  std::set<std::string> seen;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& ideal : exhaustive_borel(n, 3)) {
      if (!seen.insert(std::to_string(n) + ":" + format(ideal)).second) continue;
      corpus.push_back(std::move(ideal));
    }
  }
  borel_count = corpus.size() - random_count;
  return corpus;
}

struct CorpusEntry {
  MonomialIdeal ideal;
  BettiTable oracle;
  BettiTable ek;
  HilbertData hilbert;
};

// ---------------------------------------------------------------------------

void criterion1(const std::vector<CorpusEntry>& corpus, std::size_t random_count, std::size_t borel_count,
                Outcome& out) {
  for (const auto& c : corpus) {
    c.ek.validate();
    c.oracle.validate();
    out.expect(is_strongly_stable(c.ideal), "not strongly stable: " + format(c.ideal));
    out.expect(c.ek == c.oracle, "EK != oracle on " + format(c.ideal));
  }
  out.detail << random_count << " random + " << borel_count << " exhaustive Borel ideals";
}

void criterion2(const std::vector<CorpusEntry>& corpus, Outcome& out) {
  for (const auto& c : corpus) {
    out.expect(euler_characteristic(c.oracle) == c.hilbert.k, "Euler sum != K on " + format(c.ideal));
  }
  out.detail << corpus.size() << " ideals";
}

void criterion3(const std::vector<CorpusEntry>& corpus, Outcome& out) {
  std::size_t checked = 0;
  for (const auto& c : corpus) {
    if (!is_pure(c.oracle) || c.oracle.projective_dimension() != static_cast<int>(c.hilbert.codim)) continue;
    ++checked;
    out.expect(huneke_miller_check(c.oracle, c.hilbert.multiplicity), "p! e != prod d_i on " + format(c.ideal));
  }
  out.expect(checked > 0, "no pure Cohen-Macaulay instance in the corpus");
  out.detail << checked << " pure Cohen-Macaulay instances";
}

void criterion4(const std::vector<CorpusEntry>& corpus, Outcome& out) {
  std::size_t tight = 0;
  std::size_t cm = 0;
  for (const auto& c : corpus) {
    const ConjectureReport rep = check_improved(c.ideal);
    out.expect(rep.betti == c.oracle, "report table differs from oracle on " + format(c.ideal));
    out.expect(rep.flags.conj2_holds, "upper bound fails on " + format(c.ideal));
    out.expect(rep.flags.improved_ok, "tight without pure and CM on " + format(c.ideal));
    out.expect(!rep.counterexample_candidate, "counterexample candidate " + format(c.ideal));
    tight += rep.flags.tight_upper;
    cm += rep.flags.cm;
  }
  out.detail << corpus.size() << " ideals, " << tight << " tight, " << cm << " Cohen-Macaulay, 0 violations expected";
}

void criterion9(const std::vector<CorpusEntry>& corpus, Outcome& out) {
  std::size_t cm = 0;
  std::size_t quasi = 0;
  for (const auto& c : corpus) {
    if (c.oracle.projective_dimension() != static_cast<int>(c.hilbert.codim)) continue;
    ++cm;
    try {
      const VandermondeCertificate cert = vandermonde_certificate(c.oracle, c.hilbert.multiplicity);
      out.expect(cert.SA == factorial(cert.s) * cert.e * cert.SB, "SA != s! e SB on " + format(c.ideal));
      if (cert.quasi_pure) {
        ++quasi;
        out.expect(cert.SB > 0, "SB <= 0 on " + format(c.ideal));
        out.expect(cert.lower_value <= cert.middle_value && cert.middle_value <= cert.upper_value,
                   "sandwich fails on " + format(c.ideal));
        out.expect(cert.lower_tight == cert.pure && cert.upper_tight == cert.pure,
                   "equality does not match purity on " + format(c.ideal));
      }
    } catch (const ConsistencyError& err) {
      out.expect(false, std::string(err.what()) + " on " + format(c.ideal));
    }
  }
  out.detail << cm << " Cohen-Macaulay instances, " << quasi << " quasi-pure";
}

// ---------------------------------------------------------------------------

void increasing_sequences(std::size_t len, long lo, long hi, std::vector<long>& cur,
                          const std::function<void(const std::vector<long>&)>& visit) {
  if (cur.size() == len) {
    visit(cur);
    return;
  }
  for (long v = cur.empty() ? lo : cur.back() + 1; v <= hi; ++v) {
    cur.push_back(v);
    increasing_sequences(len, lo, hi, cur, visit);
    cur.pop_back();
  }
}

void criterion5(Outcome& out) {
  constexpr long kTop = 8;
  constexpr long kMaxDegree = 4;
  std::vector<std::vector<long>> degree_sequences;
  for (long a = 1; a <= kMaxDegree; ++a) {
    for (long b = 1; b <= kMaxDegree; ++b) {
      for (long c = 1; c <= kMaxDegree; ++c) degree_sequences.push_back({a, b, c});
    }
  }
  std::size_t profiles = 0;
  std::size_t traces = 0;
  for (int s = 0; s <= 3; ++s) {
    for (int q = s; q <= s + 1; ++q) {
      std::vector<long> cur;
      increasing_sequences(q, 1, kTop, cur, [&](const std::vector<long>& M) {
        std::vector<long> cur_m;
        increasing_sequences(q, 1, kTop, cur_m, [&](const std::vector<long>& m) {
          for (int i = 0; i < q; ++i) {
            if (m[i] > M[i]) return;
          }
          Integer lo = 1;
          Integer hi = 1;
          for (int i = 0; i < s; ++i) {
            lo *= m[i];
            hi *= M[i];
          }
          const Integer fact = factorial(s);
          Integer e_min = (lo + fact - 1) / fact;
          if (e_min < 1) e_min = 1;
          const Integer e_max = hi / fact;
          for (Integer e = e_min; e <= e_max; ++e) {
            ShiftProfile p;
            p.s = s;
            p.M = M;
            p.m = m;
            p.e = e;
            ++profiles;
            const bool p_tight = p.upper_tight();
            for (const auto& degrees : degree_sequences) {
              ++traces;
              const ExtensionTrace trace = verify_extension(p, degrees);
              out.expect(trace.ok, "bounds fail after extension");
              if (q != s) continue;
              for (std::size_t t = 1; t <= degrees.size(); ++t) {
                const std::span<const long> prefix(degrees.data(), t);
                const bool predicted = p_tight && tightness_condition(p, prefix);
                out.expect(trace.steps[t].upper_tight() == predicted, "tightness condition mismatch");
              }
            }
          }
        });
      });
    }
  }

  // Monomial cross-validation against the oracle with one extra variable.
  std::mt19937_64 rng(77);
  std::size_t cross = 0;
  while (cross < 20) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<Monomial> gens;
    for (std::size_t g = 0, count = 1 + rng() % 4; g < count; ++g) {
      std::vector<Exponent> e(n, 0);
      for (unsigned step = 0, deg = 1 + rng() % 3; step < deg; ++step) ++e[rng() % n];
      gens.emplace_back(e);
    }
    const MonomialIdeal ideal = minimalize(gens, n);
    const long d = 1 + static_cast<long>(rng() % 3);
    const HilbertData h = hilbert_data(ideal);
    const ShiftProfile p = profile_of(shifts(betti_oracle(ideal)), static_cast<int>(h.codim), h.multiplicity);
    const MonomialIdeal extended =
        sum(with_extra_vars(ideal, 1), minimalize({Monomial::variable(n + 1, n + 1, d)}, n + 1));
    const ShiftSummary direct = shifts(betti_oracle(extended));
    const ShiftProfile predicted = extend_shifts(p, d);
    out.expect(std::vector<long>(direct.M.begin(), direct.M.end()) == predicted.M &&
                   std::vector<long>(direct.m.begin(), direct.m.end()) == predicted.m,
               "extend_shifts disagrees with oracle on " + format(ideal));
    out.expect(multiplicity(extended) == predicted.e, "e' != e d on " + format(ideal));
    ++cross;
  }
  out.detail << profiles << " profiles, " << traces << " traces, " << cross << " monomial cross-checks";
}

// ---------------------------------------------------------------------------

void for_each_u_array(std::size_t rows, std::size_t m, long top,
                      const std::function<void(const std::vector<std::vector<long>>&)>& visit) {
  std::vector<std::vector<long>> u(rows, std::vector<long>(m, 0));
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == rows * m) {
      visit(u);
      return;
    }
    const std::size_t i = cell / m;
    const std::size_t j = cell % m;
    long hi = top;
    if (i > 0) hi = std::min(hi, u[i - 1][j]);
    if (i > 0 && j + 1 < m) hi = std::min(hi, u[i - 1][j + 1]);
    for (long v = 1; v <= hi; ++v) {
      u[i][j] = v;
      fill(cell + 1);
    }
  };
  fill(0);
}

void criterion6(Outcome& out) {
  std::size_t arrays = 0;
  std::size_t tight = 0;
  for (std::size_t rows = 1; rows <= 4; ++rows) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for_each_u_array(rows, m, 4, [&](const std::vector<std::vector<long>>& u) {
        ++arrays;
        const DegreeMatrix dm = DegreeMatrix::from_u(u);
        const DeterminantalBounds b = check_bounds(dm);
        out.expect(b.upper_holds, "upper determinantal bound fails");
        out.expect(b.lower_holds, "lower determinantal bound fails");
        out.expect(b.tightness_consistent, "tightness and purity disagree");
        if (rows >= 2) {
          out.expect(b.tight_upper == b.all_equal && b.tight_lower == b.all_equal, "equality without equal entries");
        } else {
          out.expect(b.tight_upper && b.tight_lower && b.pure, "r = 0 should be tight and pure");
        }
        tight += b.tight_upper;
      });
    }
  }
  std::size_t duals = 0;
  for (std::size_t rows = 1; rows <= 3; ++rows) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for_each_u_array(rows, m, 4, [&](const std::vector<std::vector<long>>& u) {
        ++duals;
        const DegreeMatrix dm = DegreeMatrix::from_u(u);
        const DegreeMatrix dual = dualize(dm);
        const DeterminantalBounds b = check_bounds(dm);
        const DeterminantalBounds bd = check_bounds(dual);
        out.expect(dualize(dual) == dm, "dualize is not an involution");
        out.expect(b.upper_slack == bd.lower_slack && b.lower_slack == bd.upper_slack, "slack symmetry fails");
      });
    }
  }
  out.detail << arrays << " u-arrays (" << tight << " tight), " << duals << " duality checks";
}

void criterion7(Outcome& out) {
  std::size_t cases = 0;
  for (std::size_t c = 1; c <= 2; ++c) {
    for (long delta = 1; delta <= 2; ++delta) {
      for (std::size_t m = 1; m <= 3; ++m) {
        ++cases;
        const std::vector<long> degrees(c, delta);
        const DegreeMatrix dm = power_matrix(degrees, m);
        std::vector<Monomial> gens;
        for (std::size_t v = 1; v <= c; ++v) gens.push_back(Monomial::variable(c, v, delta));
        const MonomialIdeal ideal = power(minimalize(gens, c), m);
        const std::string tag = "c=" + std::to_string(c) + " delta=" + std::to_string(delta) + " m=" + std::to_string(m);
        out.expect(ht_multiplicity(dm) == multiplicity(ideal), "multiplicity differs at " + tag);
        const EnShifts en = en_shifts(dm);
        const ShiftSummary sh = shifts(betti_oracle(ideal));
        out.expect(std::vector<long>(sh.M.begin(), sh.M.end()) == en.M, "M differs at " + tag);
        out.expect(std::vector<long>(sh.m.begin(), sh.m.end()) == en.m, "m differs at " + tag);
      }
    }
  }
  out.detail << cases << " power matrices";
}

void criterion8(Outcome& out) {
  const std::vector<std::pair<std::string, std::size_t>> ideals{
      {"x1, x2", 2}, {"x1^2, x2^2", 2}, {"x1^2, x1*x2", 2}, {"x1*x2, x2*x3, x1*x3", 3}};
  for (const auto& [text, n] : ideals) {
    const PowerScan scan = power_scan(parse_ideal(text, n), 6);
    out.expect(!scan.truncated && scan.steps.size() == 6, "scan truncated for (" + text + ")");
    const SlopeReport slopes = slope_equality_check(scan);
    const AsymptoticMultiplicity asym = asymptotic_multiplicity(scan);
    const LimitRatioReport limit = limit_ratio_report(scan);
    out.expect(slopes.regularity_monotone, "regularity not monotone for (" + text + ")");
    out.expect(slopes.status == ScanStatus::Consistent, "slopes " + std::string(to_string(slopes.status)) + " for (" + text + ")");
    out.expect(asym.status == ScanStatus::Consistent, "e(I,S) <= q^s " + std::string(to_string(asym.status)) + " for (" + text + ")");
    out.expect(limit.tail_at_most_one && limit.all_at_most_one, "ratio exceeds 1 for (" + text + ")");
    out.detail << "(" << text << "): e(I,S)=" << to_string(asym.e_IS) << " q=" << asym.q << " limit="
               << (limit.fitted_limit ? to_string(*limit.fitted_limit) : "-") << "; ";
  }
}

std::string capture(const std::string& cmd, int& code) {
  std::string text;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return text;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return text;
}

void criterion10(Outcome& out) {
  const std::string base = std::string(MCONJ_CLI_PATH) + " fuzz -n 3 --maxdeg 4 --count 100 --seed 314";
  int code_a = 0;
  int code_b = 0;
  int code_c = 0;
  const std::string a = capture(base, code_a);
  const std::string b = capture(base, code_b);
  const std::string c = capture(base + " --threads 1", code_c);
  out.expect(code_a == 0 && code_b == 0 && code_c == 0, "fuzz exited nonzero");
  out.expect(!a.empty() && a == b, "two runs differ");
  out.expect(a == c, "single-threaded run differs");
  out.detail << a.size() << " bytes, identical across 3 runs";
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  int failed = 0;
  const auto report = [&](int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
      body(out);
    } catch (const std::exception& err) {
      out.expect(false, std::string("exception: ") + err.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) out.expect(false, "runtime over " + std::to_string(limit_s) + " s");
    std::printf("%s criterion %d: %s | %s | %.2f s\n", out.pass ? "PASS" : "FAIL", id, title,
                out.detail.str().c_str(), secs);
    for (const auto& f : out.failures) std::printf("      %s\n", f.c_str());
    std::fflush(stdout);
    failed += !out.pass;
  };

  std::size_t random_count = 0;
  std::size_t borel_count = 0;
  std::vector<CorpusEntry> corpus;
  report(1, "Eliahou-Kervaire equals the homology oracle", 60, [&](Outcome& out) {
    for (auto& ideal : build_corpus(random_count, borel_count)) {
      CorpusEntry entry{ideal, betti_oracle(ideal), betti_ek(ideal), hilbert_data(ideal)};
      corpus.push_back(std::move(entry));
    }
    criterion1(corpus, random_count, borel_count, out);
  });
  report(2, "alternating Betti sum equals K(t)", 0, [&](Outcome& out) { criterion2(corpus, out); });
  report(3, "Huneke-Miller on pure Cohen-Macaulay instances", 0, [&](Outcome& out) { criterion3(corpus, out); });
  report(4, "upper bound and improved conjecture on stable ideals", 0,
         [&](Outcome& out) { criterion4(corpus, out); });
  report(5, "regular-sequence extension sweep", 120, criterion5);
  report(6, "determinantal bounds sweep and duality", 120, criterion6);
  report(7, "power matrices against monomial powers", 0, criterion7);
  report(8, "powers of ideals: slopes, e(I,S) <= q^s, ratios", 180, criterion8);
  report(9, "Vandermonde certificate", 0, [&](Outcome& out) { criterion9(corpus, out); });
  report(10, "fuzz determinism", 0, criterion10);
  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
