#include "mconj/regseq.hpp"

#include <algorithm>

#include "mconj/errors.hpp"

namespace mconj {

namespace {

Integer product_prefix(const std::vector<long>& values, int count) {
  Integer out = 1;
  for (int i = 0; i < count; ++i) out *= values[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

void ShiftProfile::validate() const {
  if (s < 0) throw InputError("profile codimension must be non-negative");
  if (M.size() != m.size()) throw InputError("profile M and m must have the same length");
  if (M.size() < static_cast<std::size_t>(s)) {
    throw InputError("profile needs at least s = " + std::to_string(s) + " shifts");
  }
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (m[i] <= 0 || m[i] > M[i]) {
      throw InputError("profile needs 0 < m_i <= M_i, violated at i = " + std::to_string(i + 1));
    }
  }
  if (e <= 0) throw InputError("profile multiplicity must be positive");
}

bool ShiftProfile::satisfies_bounds() const {
  const Integer scaled = factorial(static_cast<unsigned long>(s)) * e;
  return product_prefix(m, s) <= scaled && scaled <= product_prefix(M, s);
}

bool ShiftProfile::lower_tight() const {
  return factorial(static_cast<unsigned long>(s)) * e == product_prefix(m, s);
}

bool ShiftProfile::upper_tight() const {
  return factorial(static_cast<unsigned long>(s)) * e == product_prefix(M, s);
}

ShiftProfile profile_of(const ShiftSummary& summary, int s, const Integer& e) {
  ShiftProfile profile;
  profile.s = s;
  profile.M.assign(summary.M.begin(), summary.M.end());
  profile.m.assign(summary.m.begin(), summary.m.end());
  profile.e = e;
  profile.validate();
  return profile;
}

ShiftProfile extend_shifts(const ShiftProfile& profile, long d) {
  if (d < 1) throw InputError("regular element degree must be at least 1, got " + std::to_string(d));
  const std::size_t q = profile.M.size();
  ShiftProfile out;
  out.s = profile.s + 1;
  out.e = profile.e * d;
  out.M.resize(q + 1);
  out.m.resize(q + 1);
  for (std::size_t i = 0; i <= q; ++i) {
    const long prev_M = i == 0 ? 0 : profile.M[i - 1];
    const long prev_m = i == 0 ? 0 : profile.m[i - 1];
    if (i < q) {
      out.M[i] = std::max(profile.M[i], prev_M + d);
      out.m[i] = std::min(profile.m[i], prev_m + d);
    } else {
      out.M[i] = prev_M + d;
      out.m[i] = prev_m + d;
    }
  }
  return out;
}

ExtensionTrace verify_extension(const ShiftProfile& profile, std::span<const long> degrees) {
  profile.validate();
  if (!profile.satisfies_bounds()) {
    throw InputError("verify_extension needs a profile that satisfies its bounds");
  }
  for (long d : degrees) {
    if (d < 1) throw InputError("regular element degrees must be at least 1");
  }
  ExtensionTrace trace;
  trace.steps.reserve(degrees.size() + 1);
  trace.steps.push_back(profile);
  for (long d : degrees) {
    trace.steps.push_back(extend_shifts(trace.steps.back(), d));
    const bool ok = trace.steps.back().satisfies_bounds();
    trace.step_ok.push_back(ok);
    trace.ok = trace.ok && ok;
  }
  return trace;
}

bool inequality_star(int s, long d, std::span<const long> M) {
  if (s < 0 || M.size() < static_cast<std::size_t>(s)) {
    throw InputError("inequality_star needs at least s shifts");
  }
  if (d < 1) throw InputError("inequality_star needs d >= 1");
  const auto at = [&](int i) { return i == 0 ? 0L : M[static_cast<std::size_t>(i - 1)]; };
  Integer lhs = Integer(s + 1) * d;
  Integer rhs = 1;
  for (int i = 1; i <= s; ++i) {
    lhs *= at(i);
    rhs *= std::max(at(i), at(i - 1) + d);
  }
  const long last = M.size() > static_cast<std::size_t>(s)
                        ? std::max(M[static_cast<std::size_t>(s)], at(s) + d)
                        : at(s) + d;
  rhs *= last;
  return lhs <= rhs;
}

bool tightness_condition(const ShiftProfile& profile, std::span<const long> degrees) {
  if (degrees.empty()) return false;
  const long d = degrees.front();
  if (!std::all_of(degrees.begin(), degrees.end(), [d](long x) { return x == d; })) return false;
  for (int i = 1; i <= profile.s; ++i) {
    if (profile.M[static_cast<std::size_t>(i - 1)] != i * d) return false;
  }
  return true;
}

}  // namespace mconj
