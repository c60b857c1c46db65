#include "mconj/integer.hpp"

#include <cstdio>

namespace mconj {

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  if (canonical.get_den() == 1) return canonical.get_num().get_str();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

std::string to_decimal(const Rational& value) {
  // Round half away from zero at six digits, computed exactly.
  Rational scaled = value * 1000000;
  Integer num = scaled.get_num();
  Integer den = scaled.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  Integer q = (2 * num + den) / (2 * den);
  Integer whole = q / 1000000;
  Integer frac = q % 1000000;
  std::string frac_str = frac.get_str();
  frac_str.insert(0, 6 - frac_str.size(), '0');
  std::string out = (negative && q != 0) ? "-" : "";
  return out + whole.get_str() + "." + frac_str;
}

}  // namespace mconj
