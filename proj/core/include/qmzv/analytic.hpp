#pragma once

/// @file analytic.hpp
/// @brief High-precision expansions of H_{m-1}(k; q_m(t)) at the primitive
/// m-th root of unity, where q_m(t) solves q_m(0) = e^{2 pi i/m}, [m]_{q_m(t)} = t.
///
/// Every value carries its own MPFR precision; nothing reads a global default.

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "qmzv/index.hpp"
#include "qmzv/rational.hpp"

namespace qmzv {

/// Guard digits added on top of the requested working precision.
inline constexpr unsigned kGuardDigits = 10;
inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kDefaultOrder = 4;

/// Bits for the requested decimal digits plus the guard digits.
mpfr_prec_t working_bits(unsigned digits);

/// An MPFR number. Binary operations round to the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long v, mpfr_prec_t bits);
  Real(const Rational& v, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t bits);
  static Real zeta(unsigned long s, mpfr_prec_t bits);
  static Real parse(const std::string& text, mpfr_prec_t bits);

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(unsigned digits) const;

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);

/// A complex number with both parts at the same precision.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t bits = 64) : re_(bits), im_(bits) {}
  BigComplex(Real re, Real im);
  BigComplex(long re, mpfr_prec_t bits) : re_(re, bits), im_(0L, bits) {}
  BigComplex(const Rational& re, mpfr_prec_t bits) : re_(re, bits), im_(0L, bits) {}

  /// e^{2 pi i num/den}.
  static BigComplex root_of_unity(long num, unsigned long den, mpfr_prec_t bits);
  /// The imaginary unit times x.
  static BigComplex i_times(const Real& x);

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  mpfr_prec_t bits() const { return re_.bits(); }
  /// Decimal digits carried, guard digits excluded.
  unsigned digits() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const Real& s);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const Real& s) { return a *= s; }
  BigComplex operator-() const { return {-re_, -im_}; }

  BigComplex conj() const { return {re_, -im_}; }
  BigComplex pow(unsigned long e) const;
  Real abs() const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

 private:
  Real re_, im_;
};

/// c_0 + c_1 t + ... + c_{n-1} t^{n-1} in C[[t]]/(t^n).
class TruncatedSeries {
 public:
  TruncatedSeries(unsigned order, mpfr_prec_t bits);
  static TruncatedSeries constant(const BigComplex& c, unsigned order);
  /// The series t.
  static TruncatedSeries variable(unsigned order, mpfr_prec_t bits);

  unsigned order() const { return static_cast<unsigned>(c_.size()); }
  mpfr_prec_t bits() const { return bits_; }
  const BigComplex& operator[](std::size_t i) const { return c_[i]; }
  BigComplex& operator[](std::size_t i) { return c_[i]; }
  const std::vector<BigComplex>& coefficients() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const BigComplex& s);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const BigComplex& s) { return a *= s; }

  /// Raises DomainError when the constant term vanishes.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(unsigned long e) const;
  /// Largest coefficient modulus.
  Real max_abs() const;

 private:
  void check_compatible(const TruncatedSeries& o) const;
  mpfr_prec_t bits_;
  std::vector<BigComplex> c_;
};

/// Running sum with Kahan compensation on both parts.
class CompensatedSum {
 public:
  explicit CompensatedSum(mpfr_prec_t bits) : sum_(bits), carry_(bits) {}
  void add(const BigComplex& x);
  const BigComplex& value() const { return sum_; }

 private:
  BigComplex sum_, carry_;
};

/// Taylor coefficients of q_m(t) from the closed form
/// q_m(t) = zeta_m sum_l t^l sum_{j<=l} (-zeta_m)^j (-(j+1)/m)_l / ((j+1)! (l-j)!).
TruncatedSeries qm_series(unsigned m, unsigned order, unsigned digits = kDefaultDigits);

/// [m]_q = (1 - q^m)/(1 - q) for a series q with q(0) != 1.
TruncatedSeries qint_of_series(unsigned m, const TruncatedSeries& q);

/// Largest coefficient of [m]_{q_m(t)} - t.
Real qm_residual(unsigned m, unsigned order, unsigned digits = kDefaultDigits);

/// H_{m-1}(k; q_m(t)) by composing the sum with qm_series.
TruncatedSeries alpha_direct(const Index& k, unsigned m, unsigned order, unsigned digits = kDefaultDigits);

/// B_{l,j}: coefficient of y^j in (y/(e^y - 1))^l.
Rational bernoulli_power_coefficient(unsigned l, unsigned j);

/// S_{l,j}(m) = coefficient of y^j in (zeta_m e^{y/m} - 1)^l, from the Stirling expansion.
BigComplex s_coefficient(unsigned l, unsigned j, unsigned m, unsigned digits = kDefaultDigits);

/// (theta_q^r H_{m-1}(k; q)) at q = zeta_m through the theta-derivative expansion.
BigComplex theta_hsum_at_root(const Index& k, unsigned r, unsigned m, unsigned digits = kDefaultDigits);

inline constexpr unsigned kFormulaMaxL = 4;
inline constexpr unsigned kFormulaMaxWeight = 4;
inline constexpr unsigned kFormulaMaxM = 60;

/// Coefficient of t^l in H_{m-1}(k; q_m(t)) from the residue formula.
BigComplex alpha_via_formula(unsigned l, const Index& k, unsigned m, unsigned digits = kDefaultDigits);

/// Z_{m-1}(l; k) = sum_{m-1 >= m_1 > ... > m_d > 0}
///   prod (m_a/m)^{l_a} (-2 pi i/m)^{k_a} zeta_m^{(k_a-1) m_a} / (1 - zeta_m^{m_a})^{k_a}.
BigComplex zsum(const ExpVector& l, const Index& k, unsigned m, unsigned digits = kDefaultDigits);

struct ReferenceConstants {
  Real pi, zeta2, zeta3, zeta4;
};

/// Constants at digits + kGuardDigits.
ReferenceConstants reference_constants(unsigned digits = kDefaultDigits);

/// Limit of alpha_l((k); m) for a depth-one index when it is expressible in
/// the reference constants: -pi i for (1), l = 0; (1 + (-1)^k) zeta(k) for
/// l = 0, k >= 2; (-1)^k C(k+l-1, l) zeta(k+l) for l >= 1.
std::optional<BigComplex> depth_one_limit(const Index& k, unsigned l, const ReferenceConstants& c);

struct ConvergenceRow {
  unsigned m = 0;
  unsigned l = 0;
  BigComplex value;
  std::optional<BigComplex> reference;
  std::optional<Real> delta;
};

/// alpha_l(k; m) for every m in the increasing list and l < order.
std::vector<ConvergenceRow> convergence_report(const Index& k, const std::vector<unsigned>& m_list, unsigned order,
                                               unsigned digits = kDefaultDigits);

/// True when |alpha - ref| strictly decreases along the rows with fixed l.
bool monotone_decay(const std::vector<ConvergenceRow>& rows, unsigned l);

/// Coefficients alpha_l(m) of 1 - q_m(t) = -(2 pi i/m) sum_l alpha_l(m) t^l.
TruncatedSeries one_minus_q_coefficients(unsigned m, unsigned order, unsigned digits = kDefaultDigits);

struct OneMinusQFit {
  std::vector<unsigned> m;
  /// |alpha_0(m) - 1| per m.
  std::vector<double> deviation;
  /// max over m of m |alpha_0(m) - 1|.
  double c = 0;
  /// |alpha_l(2m)| / |alpha_l(m)| for consecutive doubling pairs, indexed by l (empty at l = 0).
  std::vector<std::vector<double>> doubling_ratios;
};

OneMinusQFit fit_one_minus_q(const std::vector<unsigned>& m_list, unsigned order, unsigned digits = kDefaultDigits);

}  // namespace qmzv
