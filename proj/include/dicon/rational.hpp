#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace dicon {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "a/b" form; integers print without a denominator.
inline std::string toString(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

inline std::string toString(const Integer& z) { return z.get_str(); }

inline Rational parseRational(std::string_view s) {
  Rational r;
  if (s.empty() || r.set_str(std::string(s), 10) != 0)
    fail(ErrorKind::InvalidArgument, "not a rational: '" + std::string(s) + "'");
  if (r.get_den() == 0) fail(ErrorKind::InvalidArgument, "zero denominator: '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline int signPow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Floor division for possibly negative numerators.
inline long floorDiv(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

inline bool fitsInt64(const Integer& z) {
  return z >= Integer(INT64_MIN) && z <= Integer(INT64_MAX);
}

}  // namespace dicon
