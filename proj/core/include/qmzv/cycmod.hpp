#pragma once

/// @file cycmod.hpp
/// @brief Residue rings Z_(p)[q]/([p]^n).

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "qmzv/dense_poly.hpp"
#include "qmzv/rational.hpp"

namespace qmzv {

/// Shared arithmetic data for one (p, n): the modulus [p]^n and the reducer.
template <class C>
class CycContext {
 public:
  using P = DensePoly<C>;

  CycContext(unsigned p, unsigned n) : p_(p), n_(n) {
    P qp(std::vector<C>(p, CoeffTraits<C>::from_long(1)));
    qint_p_ = qp;
    modulus_ = qp.pow(n);
    // (q^p - 1)^n = q^{np} + sum_{i<n} fold_[i] q^{ip}
    long binom = 1;
    for (unsigned i = 0; i < n; ++i) {
      fold_.push_back(CoeffTraits<C>::from_long((n - i) % 2 == 0 ? binom : -binom));
      binom = binom * static_cast<long>(n - i) / static_cast<long>(i + 1);
    }
  }

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  /// Residue length n(p-1).
  std::size_t dim() const { return static_cast<std::size_t>(n_) * (p_ - 1); }
  const P& modulus() const { return modulus_; }
  /// [p] itself, unreduced.
  const P& qint_p() const { return qint_p_; }

  P reduce(const P& a) const {
    if (a.degree() < static_cast<long>(dim())) return a;
    if (n_ == 1) return reduce_prime(a);
    const std::size_t top = static_cast<std::size_t>(n_) * p_;
    if (a.size() <= top) return rem_monic(a, modulus_);
    // [p]^n divides (q^p - 1)^n, whose sparse form folds in linear time.
    std::vector<C> r = a.coeffs();
    for (std::size_t d = r.size() - 1; d >= top; --d) {
      if (CoeffTraits<C>::is_zero(r[d])) continue;
      for (unsigned i = 0; i < n_; ++i) r[d - top + static_cast<std::size_t>(i) * p_] -= r[d] * fold_[i];
    }
    r.resize(top);
    return rem_monic(P(std::move(r)), modulus_);
  }

  P mul(const P& a, const P& b) const { return reduce(a * b); }

  /// q^e for e >= 0.
  P q_pow(unsigned long e) const {
    if (n_ == 1) return fold_monomial(e);
    return reduce(P::monomial(CoeffTraits<C>::from_long(1), e));
  }

 private:
  P fold_monomial(unsigned long e) const {
    const std::size_t r = e % p_;
    if (r < p_ - 1) return P::monomial(CoeffTraits<C>::from_long(1), r);
    return -P(std::vector<C>(p_ - 1, CoeffTraits<C>::from_long(1)));
  }

  // mod [p]: fold with q^p = 1, then eliminate q^{p-1}.
  P reduce_prime(const P& a) const {
    std::vector<C> v(p_, CoeffTraits<C>::from_long(0));
    const auto& c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) v[i % p_] += c[i];
    C top = v[p_ - 1];
    v.pop_back();
    if (!CoeffTraits<C>::is_zero(top))
      for (auto& x : v) x -= top;
    return P(std::move(v));
  }

  unsigned p_, n_;
  P qint_p_;
  P modulus_;
  std::vector<C> fold_;
};

/// Process-wide cache of contexts; contexts are immutable once built.
template <class C>
const CycContext<C>& cyc_context(unsigned p, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<CycContext<C>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, n}];
  if (!slot) slot = std::make_unique<CycContext<C>>(p, n);
  return *slot;
}

/// [l]_{q^m} * sum_{j<n} (-q [alpha]_{q^p} [p])^j with m l - p alpha = 1.
template <class C>
DensePoly<C> closed_form_qint_inverse(const CycContext<C>& ctx, unsigned m) {
  using P = DensePoly<C>;
  const unsigned p = ctx.p();
  unsigned l = 1;
  while ((static_cast<unsigned long>(m) * l) % p != 1) ++l;
  const unsigned long alpha = (static_cast<unsigned long>(m) * l - 1) / p;
  const C one = CoeffTraits<C>::from_long(1);
  P base = P(std::vector<C>(l, one)).compose_power(m);
  if (ctx.n() == 1 || alpha == 0) return ctx.reduce(base);
  P alpha_qp = P(std::vector<C>(alpha, one)).compose_power(p);
  P x = ctx.reduce(-(alpha_qp * ctx.qint_p()).shifted(1));
  P geom = P::one(), xpow = P::one();
  for (unsigned j = 1; j < ctx.n(); ++j) {
    xpow = ctx.mul(xpow, x);
    geom += xpow;
  }
  return ctx.mul(ctx.reduce(base), geom);
}

/// An element of Z_(p)[q]/([p]^n).
class CycModElement {
 public:
  /// Validates degree < n(p-1) and p-integrality of every coefficient.
  CycModElement(unsigned p, unsigned n, Poly residue);
  static CycModElement zero(unsigned p, unsigned n) { return {p, n, Poly{}}; }
  static CycModElement one(unsigned p, unsigned n) { return {p, n, Poly::one()}; }

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  const Poly& residue() const { return residue_; }
  bool is_zero() const { return residue_.is_zero(); }

  CycModElement& operator+=(const CycModElement& o);
  CycModElement& operator-=(const CycModElement& o);
  CycModElement& operator*=(const CycModElement& o);
  CycModElement& operator*=(const Rational& s);
  friend CycModElement operator+(CycModElement a, const CycModElement& b) { return a += b; }
  friend CycModElement operator-(CycModElement a, const CycModElement& b) { return a -= b; }
  friend CycModElement operator*(CycModElement a, const CycModElement& b) { return a *= b; }
  friend CycModElement operator*(CycModElement a, const Rational& s) { return a *= s; }
  friend CycModElement operator*(const Rational& s, CycModElement a) { return a *= s; }
  CycModElement operator-() const { return {p_, n_, -residue_}; }
  friend bool operator==(const CycModElement& a, const CycModElement& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.residue_ == b.residue_;
  }
  CycModElement pow(unsigned e) const;

  /// Image in Z_{p,m} for m <= n.
  CycModElement project(unsigned m) const;

  std::string to_string() const;

 private:
  void check_compatible(const CycModElement& o) const;
  unsigned p_, n_;
  Poly residue_;
};

/// f mod [p]^n; raises IntegralityError when p divides a denominator.
CycModElement reduce(const Poly& f, unsigned p, unsigned n);
/// Extended-Euclid inverse with a p-integrality check.
CycModElement inv(const CycModElement& x);
/// Closed-form inverse of [m], 1 <= m < p.
CycModElement inv_qint_closed_form(unsigned m, unsigned p, unsigned n);
/// Sum of coefficients modulo p^n, in [0, p^n).
Integer eval_at_one_mod(const CycModElement& x);

/// q^{-p} = sum_{l<n} ((1-q)[p])^l.
CycModElement q_pow_minus_p(unsigned p, unsigned n);
/// q^p = 1 - (1-q)[p].
CycModElement q_pow_p(unsigned p, unsigned n);
/// The element [p] of Z_{p,n}.
CycModElement qint_p(unsigned p, unsigned n);
/// 1 - q.
CycModElement one_minus_q(unsigned p, unsigned n);

/// Finite-S projection of an element of the product ring.
class PrimeSlice {
 public:
  explicit PrimeSlice(unsigned n) : n_(n) {}
  unsigned n() const { return n_; }
  void insert(const CycModElement& x);
  const std::map<unsigned, CycModElement>& entries() const { return entries_; }

 private:
  unsigned n_;
  std::map<unsigned, CycModElement> entries_;
};

}  // namespace qmzv
