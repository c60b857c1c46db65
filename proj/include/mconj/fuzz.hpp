#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mconj/bounds.hpp"
#include "mconj/caps.hpp"
#include "mconj/monomial.hpp"

namespace mconj {

struct FuzzConfig {
  std::size_t n = 3;
  unsigned maxdeg = 4;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  ResourceCaps caps;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

/// Seeded random strongly stable ideals: 1 to 4 monomials per ideal, each of
/// degree uniform in [1, maxdeg] and uniform among monomials of that degree,
/// closed under the Borel moves. The seed determines the output completely.
std::vector<MonomialIdeal> generate_fuzz_ideals(const FuzzConfig& config);

struct FuzzSummary {
  std::size_t count = 0;
  std::size_t holds = 0;  // s! e <= prod_{i<=s} M_i
  std::size_t tight = 0;  // upper bound attained
  std::size_t pure = 0;
  std::size_t cm = 0;
  std::size_t violations = 0;  // counterexample candidates
};

struct FuzzResult {
  FuzzConfig config;
  std::vector<ConjectureReport> reports;  // in generation order
  FuzzSummary summary;
};

/// Runs check_improved on every generated ideal over a worker pool; reports
/// are stored by input index, so the result does not depend on scheduling.
FuzzResult run_fuzz(const FuzzConfig& config);

}  // namespace mconj
