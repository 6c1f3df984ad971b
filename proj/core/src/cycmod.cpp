#include "qmzv/cycmod.hpp"

#include "qmzv/errors.hpp"

namespace qmzv {

namespace {

void check_integral(const Poly& f, unsigned p) {
  for (const auto& c : f.coeffs())
    if (!is_p_integral(c, p))
      throw IntegralityError(p, "coefficient " + c.get_str() + " is not " + std::to_string(p) + "-integral");
}

}  // namespace

CycModElement::CycModElement(unsigned p, unsigned n, Poly residue)
    : p_(p), n_(n), residue_(std::move(residue)) {
  if (p < 2 || n < 1) throw DomainError("CycModElement requires p >= 2 and n >= 1");
  if (residue_.degree() >= static_cast<long>(n) * (p - 1))
    throw DomainError("CycModElement residue degree must be below n(p-1)");
  check_integral(residue_, p);
}

void CycModElement::check_compatible(const CycModElement& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw DomainError("CycModElement: mismatched (p, n)");
}

CycModElement& CycModElement::operator+=(const CycModElement& o) {
  check_compatible(o);
  residue_ += o.residue_;
  return *this;
}

CycModElement& CycModElement::operator-=(const CycModElement& o) {
  check_compatible(o);
  residue_ -= o.residue_;
  return *this;
}

CycModElement& CycModElement::operator*=(const CycModElement& o) {
  check_compatible(o);
  residue_ = cyc_context<Rational>(p_, n_).mul(residue_, o.residue_);
  return *this;
}

CycModElement& CycModElement::operator*=(const Rational& s) {
  if (!is_p_integral(s, p_)) throw IntegralityError(p_, "scalar " + s.get_str() + " is not p-integral");
  residue_ *= s;
  return *this;
}

CycModElement CycModElement::pow(unsigned e) const {
  CycModElement r = one(p_, n_), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

CycModElement CycModElement::project(unsigned m) const {
  if (m == 0 || m > n_) throw DomainError("project: target power out of range");
  return reduce(residue_, p_, m);
}

std::string CycModElement::to_string() const { return qmzv::to_string(residue_); }

CycModElement reduce(const Poly& f, unsigned p, unsigned n) {
  check_integral(f, p);
  return CycModElement(p, n, cyc_context<Rational>(p, n).reduce(f));
}

CycModElement inv(const CycModElement& x) {
  const auto& ctx = cyc_context<Rational>(x.p(), x.n());
  ExtGcd e = ext_gcd(x.residue(), ctx.modulus());
  if (e.g.degree() != 0) throw NotInvertibleError("residue shares a factor with [p]");
  Poly s = ctx.reduce(e.s);
  check_integral(s, x.p());
  return CycModElement(x.p(), x.n(), std::move(s));
}

CycModElement inv_qint_closed_form(unsigned m, unsigned p, unsigned n) {
  if (m == 0 || m >= p) throw DomainError("inv_qint_closed_form requires 1 <= m < p");
  return CycModElement(p, n, closed_form_qint_inverse(cyc_context<Rational>(p, n), m));
}

Integer eval_at_one_mod(const CycModElement& x) {
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), x.p(), x.n());
  Rational sum = 0;
  for (const auto& c : x.residue().coeffs()) sum += c;
  return mod_rational(sum, modulus);
}

CycModElement qint_p(unsigned p, unsigned n) {
  return reduce(cyc_context<Rational>(p, n).qint_p(), p, n);
}

CycModElement one_minus_q(unsigned p, unsigned n) { return reduce(Poly{1, -1}, p, n); }

CycModElement q_pow_p(unsigned p, unsigned n) {
  return CycModElement::one(p, n) - one_minus_q(p, n) * qint_p(p, n);
}

CycModElement q_pow_minus_p(unsigned p, unsigned n) {
  CycModElement x = one_minus_q(p, n) * qint_p(p, n);
  CycModElement sum = CycModElement::one(p, n), term = CycModElement::one(p, n);
  for (unsigned l = 1; l < n; ++l) {
    term *= x;
    sum += term;
  }
  return sum;
}

void PrimeSlice::insert(const CycModElement& x) {
  if (x.n() != n_) throw DomainError("PrimeSlice: mismatched n");
  entries_.insert_or_assign(x.p(), x);
}

}  // namespace qmzv
