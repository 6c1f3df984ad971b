#include "qmzv/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qmzv/errors.hpp"

namespace qmzv {

mpfr_prec_t working_bits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil((digits + kGuardDigits) * 3.321928094887362)) + 1;
}

// ---- Real

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.bits());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::zeta(unsigned long s, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_zeta_ui(r.v_, s, MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& text, mpfr_prec_t bits) {
  Real r(bits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) throw DomainError("not a number: " + text);
  return r;
}

namespace {

// Rounds in place to the larger of the two precisions.
void widen(mpfr_ptr v, mpfr_prec_t other) {
  if (other > mpfr_get_prec(v)) mpfr_prec_round(v, other, MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(v_, o.bits());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_, o.bits());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_, o.bits());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_, o.bits());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(unsigned digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits > 0 ? digits - 1 : 0), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x);
  mpfr_log(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x);
  mpfr_cos(r.get(), r.get(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x);
  mpfr_sin(r.get(), r.get(), MPFR_RNDN);
  return r;
}

// ---- BigComplex

BigComplex::BigComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const mpfr_prec_t b = std::max(re_.bits(), im_.bits());
  widen(re_.get(), b);
  widen(im_.get(), b);
}

BigComplex BigComplex::root_of_unity(long num, unsigned long den, mpfr_prec_t bits) {
  if (den == 0) throw DomainError("root of unity of order 0");
  long r = num % static_cast<long>(den);
  if (r < 0) r += static_cast<long>(den);
  Real angle = Real::pi(bits + 16) * Real(2 * r, bits + 16) / Real(static_cast<long>(den), bits + 16);
  Real c(bits), s(bits);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {c, s};
}

BigComplex BigComplex::i_times(const Real& x) { return {Real(0L, x.bits()), x}; }

unsigned BigComplex::digits() const {
  const double d = static_cast<double>(bits()) / 3.321928094887362 - kGuardDigits;
  return d > 0 ? static_cast<unsigned>(d) : 0;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const Real den = o.re_ * o.re_ + o.im_ * o.im_;
  if (den.is_zero()) throw DomainError("complex division by zero");
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const Real& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

BigComplex BigComplex::pow(unsigned long e) const {
  BigComplex r(1L, bits()), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Real BigComplex::abs() const {
  Real r(bits());
  mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
  return r;
}

// ---- TruncatedSeries

TruncatedSeries::TruncatedSeries(unsigned order, mpfr_prec_t bits) : bits_(bits), c_(order, BigComplex(bits)) {
  if (order == 0) throw DomainError("series order must be positive");
}

TruncatedSeries TruncatedSeries::constant(const BigComplex& c, unsigned order) {
  TruncatedSeries s(order, c.bits());
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(unsigned order, mpfr_prec_t bits) {
  TruncatedSeries s(order, bits);
  if (order > 1) s.c_[1] = BigComplex(1L, bits);
  return s;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (o.order() != order()) throw DomainError("series orders differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries r(a.order(), std::max(a.bits_, b.bits_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  *this = *this * o;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigComplex& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0].is_zero()) throw DomainError("series with vanishing constant term is not invertible");
  TruncatedSeries r(order(), bits_);
  const BigComplex inv0 = BigComplex(1L, bits_) / c_[0];
  r.c_[0] = inv0;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    BigComplex acc(bits_);
    for (std::size_t i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
    r.c_[n] = -(acc * inv0);
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned long e) const {
  TruncatedSeries r = constant(BigComplex(1L, bits_), order()), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Real TruncatedSeries::max_abs() const {
  Real m(0L, bits_);
  for (const auto& x : c_) m = std::max(m, x.abs(), [](const Real& a, const Real& b) { return a < b; });
  return m;
}

void CompensatedSum::add(const BigComplex& x) {
  BigComplex y = x - carry_;
  BigComplex t = sum_ + y;
  carry_ = (t - sum_) - y;
  sum_ = std::move(t);
}

// ---- q_m(t)

namespace {

void check_m_digits(unsigned m, unsigned digits) {
  if (m < 2) throw DomainError("m must be at least 2");
  if (digits < 16) throw DomainError("precision underflow: at least 16 digits are required");
}

Rational pochhammer(const Rational& a, unsigned l) {
  Rational r = 1;
  for (unsigned i = 0; i < l; ++i) r *= a + i;
  return r;
}

class SeriesAccumulator {
 public:
  SeriesAccumulator(unsigned order, mpfr_prec_t bits) : bits_(bits), c_(order, CompensatedSum(bits)) {}
  void add(const TruncatedSeries& s) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i].add(s[i]);
  }
  TruncatedSeries value() const {
    TruncatedSeries s(static_cast<unsigned>(c_.size()), bits_);
    for (std::size_t i = 0; i < c_.size(); ++i) s[i] = c_[i].value();
    return s;
  }

 private:
  mpfr_prec_t bits_;
  std::vector<CompensatedSum> c_;
};

// sum_{upper >= mu_1 > ... > mu_d >= 1} prod_a phi[a][mu_a], phi[a] indexed from 1.
BigComplex nested_sum(const std::vector<std::vector<BigComplex>>& phi, unsigned upper, mpfr_prec_t bits) {
  const std::size_t d = phi.size();
  if (d == 0) return BigComplex(1L, bits);
  // level[a] = sum over mu_a <= current of phi[a][mu_a] * level[a+1](mu_a - 1).
  std::vector<CompensatedSum> level(d, CompensatedSum(bits));
  for (unsigned mu = 1; mu <= upper; ++mu) {
    for (std::size_t a = 0; a < d; ++a) {
      if (a + 1 < d) level[a].add(phi[a][mu] * level[a + 1].value());
      else level[a].add(phi[a][mu]);
    }
  }
  return level[0].value();
}

// Weak compositions of total into parts entries.
void weak_compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur,
                       std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned x = 0; x <= total; ++x) {
    cur.push_back(x);
    weak_compositions(total - x, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> weak_compositions(unsigned total, std::size_t parts) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur;
  weak_compositions(total, parts, cur, out);
  return out;
}

struct RootTable {
  std::vector<BigComplex> pow;  // zeta^j, 0 <= j < m
  unsigned m;
  RootTable(unsigned m_, mpfr_prec_t bits) : m(m_) {
    for (unsigned j = 0; j < m; ++j) pow.push_back(BigComplex::root_of_unity(j, m, bits));
  }
  const BigComplex& at(unsigned long e) const { return pow[e % m]; }
  // zeta^{(k-1) mu} / (1 - zeta^mu)^k
  BigComplex g(unsigned k, unsigned mu) const {
    const BigComplex one(1L, pow[0].bits());
    return at(static_cast<unsigned long>(k - 1) * mu) / (one - at(mu)).pow(k);
  }
};

}  // namespace

TruncatedSeries qm_series(unsigned m, unsigned order, unsigned digits) {
  check_m_digits(m, digits);
  const mpfr_prec_t bits = working_bits(digits);
  const BigComplex zeta = BigComplex::root_of_unity(1, m, bits);
  const BigComplex minus_zeta = -zeta;
  TruncatedSeries s(order, bits);
  for (unsigned l = 0; l < order; ++l) {
    BigComplex acc(bits);
    BigComplex mz_pow(1L, bits);
    for (unsigned j = 0; j <= l; ++j) {
      const Rational r = pochhammer(make_rational(-static_cast<long>(j + 1), m), l) /
                         Rational(factorial(j + 1) * factorial(l - j));
      acc += mz_pow * Real(r, bits);
      mz_pow *= minus_zeta;
    }
    s[l] = zeta * acc;
  }
  return s;
}

TruncatedSeries qint_of_series(unsigned m, const TruncatedSeries& q) {
  const TruncatedSeries one = TruncatedSeries::constant(BigComplex(1L, q.bits()), q.order());
  return (one - q.pow(m)) * (one - q).inverse();
}

Real qm_residual(unsigned m, unsigned order, unsigned digits) {
  const TruncatedSeries q = qm_series(m, order, digits);
  return (qint_of_series(m, q) - TruncatedSeries::variable(order, q.bits())).max_abs();
}

TruncatedSeries alpha_direct(const Index& k, unsigned m, unsigned order, unsigned digits) {
  check_m_digits(m, digits);
  const mpfr_prec_t bits = working_bits(digits);
  const TruncatedSeries one = TruncatedSeries::constant(BigComplex(1L, bits), order);
  if (k.empty()) return one;
  if (k.depth() > m - 1) throw DomainError("depth exceeds m - 1");
  const TruncatedSeries q = qm_series(m, order, digits);
  const TruncatedSeries inv_one_minus_q = (one - q).inverse();
  const std::size_t d = k.depth();
  std::vector<SeriesAccumulator> level(d, SeriesAccumulator(order, bits));
  TruncatedSeries qa = one;
  for (unsigned a = 1; a < m; ++a) {
    qa *= q;
    // 1/[a] with [a] = (1 - q^a)/(1 - q); its constant term is nonzero for 0 < a < m.
    const TruncatedSeries inv_bracket = ((one - qa) * inv_one_minus_q).inverse();
    const TruncatedSeries ratio = qa * inv_bracket;
    std::map<unsigned, TruncatedSeries> terms;
    for (std::size_t i = 0; i < d; ++i)
      if (!terms.count(k[i])) terms.emplace(k[i], ratio.pow(k[i] - 1) * inv_bracket);
    for (std::size_t i = 0; i < d; ++i) {
      if (i + 1 < d) level[i].add(terms.at(k[i]) * level[i + 1].value());
      else level[i].add(terms.at(k[i]));
    }
  }
  return level[0].value();
}

Rational bernoulli_power_coefficient(unsigned l, unsigned j) {
  const std::size_t n = j + 1;
  // (e^y - 1)/y, inverted, then raised to l.
  std::vector<Rational> e(n), inv(n), acc(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = Rational(1, 1) / Rational(factorial(i + 1));
  inv[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    Rational s = 0;
    for (std::size_t t = 1; t <= i; ++t) s += e[t] * inv[i - t];
    inv[i] = -s;
  }
  acc[0] = 1;
  for (unsigned r = 0; r < l; ++r) {
    std::vector<Rational> next(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; a + b < n; ++b) next[a + b] += acc[a] * inv[b];
    acc = std::move(next);
  }
  return acc[j];
}

BigComplex s_coefficient(unsigned l, unsigned j, unsigned m, unsigned digits) {
  check_m_digits(m, digits);
  const mpfr_prec_t bits = working_bits(digits);
  const BigComplex zeta = BigComplex::root_of_unity(1, m, bits);
  const BigComplex zm1 = zeta - BigComplex(1L, bits);
  if (j == 0) return zm1.pow(l);
  BigComplex acc(bits);
  for (unsigned n = 1; n <= std::min(j, l); ++n) {
    const Integer c = factorial(n) * stirling2(j, n) * binomial(l, n);
    acc += zeta.pow(n) * zm1.pow(l - n) * Real(Rational(c), bits);
  }
  Integer mj;
  mpz_ui_pow_ui(mj.get_mpz_t(), m, j);
  return acc * Real(Rational(1, 1) / Rational(factorial(j) * mj), bits);
}

namespace {

// T_{s,l}(k) = (s!/l!) sum_{a=s}^{l} C(l,a) S(a,s) (k-1)^{l-a}
Rational t_coefficient(unsigned s, unsigned l, unsigned k) {
  Rational acc = 0;
  for (unsigned a = s; a <= l; ++a) {
    Integer km1_pow;
    mpz_ui_pow_ui(km1_pow.get_mpz_t(), k - 1, l - a);
    acc += Rational(binomial(l, a) * stirling2(a, s) * km1_pow);
  }
  return acc * Rational(factorial(s)) / Rational(factorial(l));
}

}  // namespace

BigComplex theta_hsum_at_root(const Index& k, unsigned r, unsigned m, unsigned digits) {
  check_m_digits(m, digits);
  const mpfr_prec_t bits = working_bits(digits);
  if (k.empty()) return BigComplex(r == 0 ? 1L : 0L, bits);
  if (k.depth() > m - 1) throw DomainError("depth exceeds m - 1");
  const RootTable roots(m, bits);
  const unsigned w = k.weight();
  const std::size_t d = k.depth();
  // H = (1-q)^w G with G = sum prod q^{(k_a-1) m_a}/(1-q^{m_a})^{k_a}; theta is a derivation.
  BigComplex total(bits);
  for (unsigned i = 0; i <= r; ++i) {
    // theta^i (1-q)^w at zeta
    BigComplex poly_part(bits);
    for (unsigned t = 0; t <= w; ++t) {
      Integer c = binomial(w, t);
      if (t % 2) c = -c;
      Integer tp;
      mpz_ui_pow_ui(tp.get_mpz_t(), t, i);
      if (i == 0) tp = 1;
      if (sgn(c * tp) == 0) continue;
      poly_part += roots.at(t) * Real(Rational(c * tp), bits);
    }
    if (poly_part.is_zero()) continue;
    // theta^{r-i} G = (r-i)! sum_{|l| = r-i} nested sum of prod mu^{l_a} sum_s T C g_{k_a+s}
    const unsigned rr = r - i;
    BigComplex g_part(bits);
    for (const auto& lv : weak_compositions(rr, d)) {
      std::vector<std::vector<BigComplex>> phi(d, std::vector<BigComplex>(m, BigComplex(bits)));
      for (std::size_t a = 0; a < d; ++a) {
        std::vector<Rational> coeff(lv[a] + 1);
        for (unsigned s = 0; s <= lv[a]; ++s)
          coeff[s] = t_coefficient(s, lv[a], k[a]) * Rational(binomial(s + k[a] - 1, s));
        for (unsigned mu = 1; mu < m; ++mu) {
          BigComplex v(bits);
          for (unsigned s = 0; s <= lv[a]; ++s)
            if (sgn(coeff[s]) != 0) v += roots.g(k[a] + s, mu) * Real(coeff[s], bits);
          Integer mul;
          mpz_ui_pow_ui(mul.get_mpz_t(), mu, lv[a]);
          phi[a][mu] = v * Real(Rational(mul), bits);
        }
      }
      g_part += nested_sum(phi, m - 1, bits);
    }
    g_part *= Real(Rational(factorial(rr)), bits);
    total += poly_part * g_part * Real(Rational(binomial(r, i)), bits);
  }
  return total;
}

BigComplex alpha_via_formula(unsigned l, const Index& k, unsigned m, unsigned digits) {
  if (l > kFormulaMaxL || k.weight() > kFormulaMaxWeight || m > kFormulaMaxM)
    throw DomainError("alpha_via_formula: parameter bounds exceeded (l <= 4, weight <= 4, m <= 60)");
  check_m_digits(m, digits);
  const mpfr_prec_t bits = working_bits(digits);
  if (l == 0) return theta_hsum_at_root(k, 0, m, digits);
  std::vector<BigComplex> theta(l + 1, BigComplex(bits));
  for (unsigned r = 1; r <= l; ++r) theta[r] = theta_hsum_at_root(k, r, m, digits);
  BigComplex acc(bits);
  for (unsigned j1 = 0; j1 < l; ++j1) {
    const Rational b = bernoulli_power_coefficient(l, j1);
    if (sgn(b) == 0) continue;
    for (unsigned j2 = 0; j1 + j2 < l; ++j2) {
      const unsigned j3 = l - 1 - j1 - j2;
      Integer mp;
      mpz_ui_pow_ui(mp.get_mpz_t(), m, j3 + 1);
      const Rational scale = b / Rational(factorial(j3) * mp);
      acc += s_coefficient(l, j2, m, digits) * theta[j3 + 1] * Real(scale, bits);
    }
  }
  return acc * Real(make_rational(1, l), bits);
}

BigComplex zsum(const ExpVector& l, const Index& k, unsigned m, unsigned digits) {
  if (l.size() != k.depth()) throw DomainError("zsum: l and k must have the same length");
  check_m_digits(m, digits);
  const mpfr_prec_t bits = working_bits(digits);
  if (k.empty()) return BigComplex(1L, bits);
  const RootTable roots(m, bits);
  // -2 pi i / m
  const BigComplex c = BigComplex::i_times(-(Real::pi(bits) * Real(2L, bits) / Real(static_cast<long>(m), bits)));
  const std::size_t d = k.depth();
  std::vector<std::vector<BigComplex>> phi(d, std::vector<BigComplex>(m, BigComplex(bits)));
  for (std::size_t a = 0; a < d; ++a) {
    const BigComplex ck = c.pow(k[a]);
    for (unsigned mu = 1; mu < m; ++mu) {
      Real ratio(make_rational(mu, m), bits);
      Real rp(1L, bits);
      for (unsigned e = 0; e < l[a]; ++e) rp *= ratio;
      phi[a][mu] = roots.g(k[a], mu) * ck * rp;
    }
  }
  return nested_sum(phi, m - 1, bits);
}

ReferenceConstants reference_constants(unsigned digits) {
  const mpfr_prec_t bits = working_bits(digits);
  return {Real::pi(bits), Real::zeta(2, bits), Real::zeta(3, bits), Real::zeta(4, bits)};
}

std::optional<BigComplex> depth_one_limit(const Index& k, unsigned l, const ReferenceConstants& c) {
  if (k.depth() != 1) return std::nullopt;
  const unsigned k1 = k[0];
  const mpfr_prec_t bits = c.pi.bits();
  auto zeta = [&](unsigned n) -> std::optional<Real> {
    switch (n) {
      case 2: return c.zeta2;
      case 3: return c.zeta3;
      case 4: return c.zeta4;
      default: return std::nullopt;
    }
  };
  if (l == 0) {
    if (k1 == 1) return BigComplex::i_times(-c.pi);
    if (k1 % 2 == 1) return BigComplex(0L, bits);
    auto z = zeta(k1);
    if (!z) return std::nullopt;
    return BigComplex(*z * Real(2L, bits), Real(0L, bits));
  }
  auto z = zeta(k1 + l);
  if (!z) return std::nullopt;
  Rational coeff(binomial(k1 + l - 1, l));
  if (k1 % 2) coeff = -coeff;
  return BigComplex(*z * Real(coeff, bits), Real(0L, bits));
}

std::vector<ConvergenceRow> convergence_report(const Index& k, const std::vector<unsigned>& m_list, unsigned order,
                                               unsigned digits) {
  for (std::size_t i = 1; i < m_list.size(); ++i)
    if (m_list[i] <= m_list[i - 1]) throw DomainError("m values must be strictly increasing");
  const ReferenceConstants refs = reference_constants(digits);
  std::vector<ConvergenceRow> rows;
  for (unsigned m : m_list) {
    const TruncatedSeries s = alpha_direct(k, m, order, digits);
    for (unsigned l = 0; l < order; ++l) {
      ConvergenceRow row{m, l, s[l], depth_one_limit(k, l, refs), std::nullopt};
      if (row.reference) row.delta = (row.value - *row.reference).abs();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

bool monotone_decay(const std::vector<ConvergenceRow>& rows, unsigned l) {
  std::optional<Real> prev;
  std::size_t count = 0;
  for (const auto& r : rows) {
    if (r.l != l) continue;
    if (!r.delta) return false;
    if (prev && !(*r.delta < *prev)) return false;
    prev = *r.delta;
    ++count;
  }
  return count >= 2;
}

TruncatedSeries one_minus_q_coefficients(unsigned m, unsigned order, unsigned digits) {
  TruncatedSeries q = qm_series(m, order, digits);
  const mpfr_prec_t bits = q.bits();
  q[0] -= BigComplex(1L, bits);
  // m/(2 pi i) = -i m/(2 pi)
  const Real scale = Real(static_cast<long>(m), bits) / (Real::pi(bits) * Real(2L, bits));
  return q * BigComplex::i_times(-scale);
}

OneMinusQFit fit_one_minus_q(const std::vector<unsigned>& m_list, unsigned order, unsigned digits) {
  OneMinusQFit fit;
  std::map<unsigned, TruncatedSeries> by_m;
  for (unsigned m : m_list) {
    const TruncatedSeries a = one_minus_q_coefficients(m, order, digits);
    const double dev = (a[0] - BigComplex(1L, a.bits())).abs().to_double();
    fit.m.push_back(m);
    fit.deviation.push_back(dev);
    fit.c = std::max(fit.c, dev * m);
    by_m.emplace(m, a);
  }
  fit.doubling_ratios.assign(order, {});
  for (const auto& [m, a] : by_m) {
    auto it = by_m.find(2 * m);
    if (it == by_m.end()) continue;
    for (unsigned l = 1; l < order; ++l)
      fit.doubling_ratios[l].push_back(it->second[l].abs().to_double() / a[l].abs().to_double());
  }
  return fit;
}

}  // namespace qmzv
