#pragma once

/// @file dense_poly.hpp
/// @brief Dense univariate polynomials over an exact coefficient ring.
///
/// The same template serves three coefficient rings: rationals (the public
/// Poly), integers (exact residue tables) and ModInt (fast vectorization).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "qmzv/modint.hpp"

namespace qmzv {

/// Degree of the zero polynomial.
inline constexpr long kDegreeNegInf = std::numeric_limits<long>::min();

template <class C>
struct CoeffTraits {
  static bool is_zero(const C& c) { return c == 0; }
  static C from_long(long x) { return C(x); }
};

template <>
struct CoeffTraits<mpq_class> {
  static bool is_zero(const mpq_class& c) { return sgn(c) == 0; }
  static mpq_class from_long(long x) { return mpq_class(x); }
};

template <>
struct CoeffTraits<mpz_class> {
  static bool is_zero(const mpz_class& c) { return sgn(c) == 0; }
  static mpz_class from_long(long x) { return mpz_class(x); }
};

namespace detail {

template <class C>
void convolve_add(const C* a, std::size_t na, const C* b, std::size_t nb, C* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (CoeffTraits<C>::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] += a[i] * b[j];
  }
}

/// Integer convolution; large inputs go through one GMP product (Kronecker substitution).
void convolve_add(const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb, mpz_class* out);

template <std::uint64_t P>
void convolve_add(const ModInt<P>* a, std::size_t na, const ModInt<P>* b, std::size_t nb,
                  ModInt<P>* out) {
  // Products are below 2^122, so 32 of them fit an unsigned 128-bit sum.
  const std::size_t n = na + nb - 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
    std::size_t hi = std::min(k, na - 1);
    unsigned __int128 acc = out[k].v;
    int pending = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
      acc += static_cast<unsigned __int128>(a[i].v) * b[k - i].v;
      if (++pending == 32) {
        acc = ModInt<P>::reduce(acc);
        pending = 0;
      }
    }
    out[k] = ModInt<P>::raw(ModInt<P>::reduce(acc));
  }
}

}  // namespace detail

template <class C>
class DensePoly {
 public:
  using coeff_type = C;

  DensePoly() = default;
  explicit DensePoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.push_back(CoeffTraits<C>::from_long(x));
    trim();
  }

  static DensePoly constant(const C& c) { return DensePoly(std::vector<C>{c}); }
  static DensePoly monomial(const C& c, std::size_t degree) {
    std::vector<C> v(degree + 1, CoeffTraits<C>::from_long(0));
    v[degree] = c;
    return DensePoly(std::move(v));
  }
  static DensePoly one() { return constant(CoeffTraits<C>::from_long(1)); }
  static DensePoly q() { return monomial(CoeffTraits<C>::from_long(1), 1); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return c_.empty() ? kDegreeNegInf : static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : CoeffTraits<C>::from_long(0); }
  const C& leading() const { return c_.back(); }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), CoeffTraits<C>::from_long(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), CoeffTraits<C>::from_long(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const C& s) {
    if (CoeffTraits<C>::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) {
    *this = *this * o;
    return *this;
  }

  /// this += s * q^shift * o
  void add_scaled(const DensePoly& o, const C& s, std::size_t shift = 0) {
    if (o.is_zero() || CoeffTraits<C>::is_zero(s)) return;
    if (o.c_.size() + shift > c_.size()) c_.resize(o.c_.size() + shift, CoeffTraits<C>::from_long(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i + shift] += s * o.c_[i];
    trim();
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const C& s) { return a *= s; }
  friend DensePoly operator*(const C& s, DensePoly a) { return a *= s; }
  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, CoeffTraits<C>::from_long(0));
    detail::convolve_add(a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size(), out.data());
    return DensePoly(std::move(out));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> v(k, CoeffTraits<C>::from_long(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return DensePoly(std::move(v));
  }

  C eval(const C& x) const {
    C r = CoeffTraits<C>::from_long(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * CoeffTraits<C>::from_long(static_cast<long>(i));
    return DensePoly(std::move(v));
  }

  /// q d/dq
  DensePoly theta() const {
    std::vector<C> v(c_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= CoeffTraits<C>::from_long(static_cast<long>(i));
    return DensePoly(std::move(v));
  }

  /// Substitution q -> q^k.
  DensePoly compose_power(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> v((c_.size() - 1) * k + 1, CoeffTraits<C>::from_long(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return DensePoly(std::move(v));
  }

  DensePoly pow(unsigned e) const {
    DensePoly r = one(), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  std::vector<C>& mutable_coeffs() { return c_; }
  void trim() {
    while (!c_.empty() && CoeffTraits<C>::is_zero(c_.back())) c_.pop_back();
  }

 private:
  std::vector<C> c_;
};

/// Remainder and quotient by a monic divisor; no coefficient division needed.
template <class C>
std::pair<DensePoly<C>, DensePoly<C>> divmod_monic(const DensePoly<C>& a, const DensePoly<C>& m) {
  const long dm = m.degree();
  if (a.degree() < dm) return {DensePoly<C>{}, a};
  std::vector<C> r = a.coeffs();
  const auto& mc = m.coeffs();
  std::vector<C> quot(r.size() - static_cast<std::size_t>(dm), CoeffTraits<C>::from_long(0));
  for (long i = static_cast<long>(r.size()) - 1; i >= dm; --i) {
    C t = r[static_cast<std::size_t>(i)];
    if (CoeffTraits<C>::is_zero(t)) continue;
    const std::size_t base = static_cast<std::size_t>(i - dm);
    quot[base] = t;
    for (long j = 0; j <= dm; ++j) r[base + static_cast<std::size_t>(j)] -= t * mc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dm));
  return {DensePoly<C>(std::move(quot)), DensePoly<C>(std::move(r))};
}

template <class C>
DensePoly<C> rem_monic(const DensePoly<C>& a, const DensePoly<C>& m) {
  return divmod_monic(a, m).second;
}

using Poly = DensePoly<mpq_class>;
using IntPoly = DensePoly<mpz_class>;

/// 1 + q + ... + q^{n-1}
Poly q_int(unsigned n);
/// prod_{j=1}^{m} [n-j+1]/[j]
Poly q_binom(unsigned n, unsigned m);

/// Quotient and remainder over Q.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd over Q.
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, s, t) with s a + t b = g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

IntPoly to_int_poly(const Poly& p);  // requires integral coefficients
Poly to_rational_poly(const IntPoly& p);

/// "2-2q+(1/2)q^3" style rendering, ascending degree.
std::string to_string(const Poly& p);

}  // namespace qmzv
