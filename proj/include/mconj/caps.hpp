#pragma once

#include <cstddef>
#include <string>

namespace mconj {

/// Explicit limits for the combinatorial kernels. Exceeding one raises
/// ResourceError naming the cap.
struct ResourceCaps {
  std::size_t max_lcm_lattice = 200000;  // candidate multidegrees per ideal
  std::size_t max_matrix_dim = 4096;     // rows or columns of a boundary matrix
  std::size_t max_generators = 50000;    // minimal generators of any ideal built

  /// Overrides from MCONJ_CAP_LCM, MCONJ_CAP_MATRIX, MCONJ_CAP_GENERATORS.
  static ResourceCaps from_env(ResourceCaps base);
  static ResourceCaps from_env() { return from_env(ResourceCaps{}); }
};

inline constexpr const char* kCapEnvPrefix = "MCONJ_CAP_";

}  // namespace mconj
