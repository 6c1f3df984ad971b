#pragma once

#include <map>
#include <string>

#include "qmzv/dense_poly.hpp"
#include "qmzv/rational.hpp"

namespace qmzv {

/// Phi_d(q), the d-th cyclotomic polynomial (d >= 1).
const Poly& cyclotomic(unsigned d);

/// Divisors of n in increasing order.
std::vector<unsigned> divisors(unsigned n);

/// Rational functions whose denominators are products of cyclotomic
/// polynomials. Every q-integer, 1 - q^m and q-binomial quotient lives here.
///
/// Canonical form: num is not divisible by any Phi_d with a positive exponent
/// in den, so num/den is reduced and den is monic.
class RatFun {
 public:
  using Factors = std::map<unsigned, unsigned>;

  RatFun() = default;
  RatFun(Poly num);  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatFun(long c);  // NOLINT(google-explicit-constructor)

  static RatFun from_parts(Poly num, Factors den);
  /// 1/[m]^k
  static RatFun qint_inverse_power(unsigned m, unsigned k);
  /// 1/(1-q^m)^k
  static RatFun one_minus_qm_inverse_power(unsigned m, unsigned k);

  const Poly& num() const { return num_; }
  const Factors& den_factors() const { return den_; }
  Poly den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Multiplicative inverse; the numerator must itself be a constant times
  /// cyclotomic factors.
  RatFun inverse() const;
  /// q d/dq
  RatFun theta() const;
  RatFun pow(unsigned e) const;
  Rational eval(const Rational& x) const;

  std::string to_string() const;

 private:
  void canonicalize();
  Poly num_;
  Factors den_;
};

}  // namespace qmzv
