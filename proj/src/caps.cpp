#include "mconj/caps.hpp"

#include <cstdlib>

#include "mconj/errors.hpp"

namespace mconj {

namespace {

void override_from(const char* suffix, std::size_t& target) {
  std::string name = std::string(kCapEnvPrefix) + suffix;
  const char* raw = std::getenv(name.c_str());
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw InputError(name + " must be a positive integer, got '" + raw + "'");
  }
  target = static_cast<std::size_t>(value);
}

}  // namespace

ResourceCaps ResourceCaps::from_env(ResourceCaps base) {
  override_from("LCM", base.max_lcm_lattice);
  override_from("MATRIX", base.max_matrix_dim);
  override_from("GENERATORS", base.max_generators);
  return base;
}

}  // namespace mconj
