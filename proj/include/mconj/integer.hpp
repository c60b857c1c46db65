#pragma once

#include <gmpxx.h>

#include <string>

namespace mconj {

/// Arbitrary-precision integers and rationals. Every count, multiplicity and
/// bound in the library is carried in these types; nothing is floating point
/// except the human-readable decimal renderings in reports.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

std::string to_string(const Integer& value);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Fixed six-digit decimal rendering, for reports only.
std::string to_decimal(const Rational& value);

}  // namespace mconj
