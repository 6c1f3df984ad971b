#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qmzv {

using Integer = mpz_class;
using Rational = mpq_class;

/// "num/den" with den >= 1, always including the denominator.
std::string to_fraction_string(const Rational& x);

/// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

/// True when p does not divide the (reduced) denominator.
bool is_p_integral(const Rational& x, unsigned long p);

Integer binomial(long n, long k);
Integer factorial(unsigned long n);
/// Stirling numbers of the second kind S(n, k).
Integer stirling2(unsigned n, unsigned k);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// x mod M for a p-integral rational, as a representative in [0, M).
Integer mod_rational(const Rational& x, const Integer& modulus);

}  // namespace qmzv
