#include "qmzv/ratfun.hpp"

#include "qmzv/errors.hpp"

namespace qmzv {

namespace {

Poly factor_power(unsigned d, unsigned e) { return cyclotomic(d).pow(e); }

long euler_phi(unsigned n) {
  long r = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

RatFun::RatFun(Poly num) : num_(std::move(num)) {}
RatFun::RatFun(const Rational& c) : num_(Poly::constant(c)) {}
RatFun::RatFun(long c) : num_(Poly::constant(Rational(c))) {}

RatFun RatFun::from_parts(Poly num, Factors den) {
  RatFun r;
  r.num_ = std::move(num);
  for (auto [d, e] : den)
    if (e > 0) r.den_[d] = e;
  r.canonicalize();
  return r;
}

RatFun RatFun::qint_inverse_power(unsigned m, unsigned k) {
  if (m == 0) throw DomainError("[0] is not invertible");
  Factors f;
  for (unsigned d : divisors(m))
    if (d > 1 && k > 0) f[d] = k;
  return from_parts(Poly::one(), std::move(f));
}

RatFun RatFun::one_minus_qm_inverse_power(unsigned m, unsigned k) {
  if (m == 0) throw DomainError("1 - q^0 is not invertible");
  Factors f;
  for (unsigned d : divisors(m))
    if (k > 0) f[d] = k;
  return from_parts(Poly::constant(Rational(k % 2 ? -1 : 1)), std::move(f));
}

Poly RatFun::den() const {
  Poly r = Poly::one();
  for (auto [d, e] : den_) r = r * factor_power(d, e);
  return r;
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    const Poly& phi = cyclotomic(it->first);
    while (it->second > 0) {
      auto [quot, rem] = divmod_monic(num_, phi);
      if (!rem.is_zero()) break;
      num_ = std::move(quot);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Factors common = den_;
  for (auto [d, e] : o.den_) common[d] = std::max(common[d], e);
  Poly a = num_, b = o.num_;
  for (auto [d, e] : common) {
    auto ia = den_.find(d);
    unsigned ea = ia == den_.end() ? 0 : ia->second;
    auto ib = o.den_.find(d);
    unsigned eb = ib == o.den_.end() ? 0 : ib->second;
    if (e > ea) a = a * factor_power(d, e - ea);
    if (e > eb) b = b * factor_power(d, e - eb);
  }
  num_ = a + b;
  den_ = std::move(common);
  canonicalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  for (auto [d, e] : o.den_) den_[d] += e;
  canonicalize();
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw NotInvertibleError("RatFun: inverse of zero");
  Poly rest = num_;
  Factors found;
  if (sgn(rest.coeff(0)) == 0) throw NotInvertibleError("RatFun: numerator divisible by q");
  while (rest.degree() > 0) {
    const long deg = rest.degree();
    const unsigned bound = static_cast<unsigned>(std::max<long>(6, deg * deg + 2));
    bool hit = false;
    for (unsigned d = 1; d <= bound && !hit; ++d) {
      if (euler_phi(d) > deg) continue;
      auto [quot, rem] = divmod_monic(rest, cyclotomic(d));
      if (rem.is_zero()) {
        rest = std::move(quot);
        ++found[d];
        hit = true;
      }
    }
    if (!hit) throw NotInvertibleError("RatFun: numerator is not a product of cyclotomic factors");
  }
  Poly num = Poly::constant(Rational(1 / rest.leading()));
  for (auto [d, e] : den_) num = num * factor_power(d, e);
  return from_parts(std::move(num), std::move(found));
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::theta() const {
  if (den_.empty()) return RatFun(num_.theta());
  Poly radical = Poly::one();
  for (auto [d, e] : den_) radical = radical * cyclotomic(d);
  Poly numer = num_.theta() * radical;
  for (auto [d, e] : den_) {
    Poly others = Poly::one();
    for (auto [d2, e2] : den_)
      if (d2 != d) others = others * cyclotomic(d2);
    numer -= num_ * cyclotomic(d).theta() * others * Rational(e);
  }
  Factors den = den_;
  for (auto& [d, e] : den) ++e;
  return from_parts(std::move(numer), std::move(den));
}

RatFun RatFun::pow(unsigned e) const {
  RatFun r(1L), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Rational RatFun::eval(const Rational& x) const {
  Rational d = den().eval(x);
  if (sgn(d) == 0) throw NotInvertibleError("RatFun: evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RatFun::to_string() const {
  if (den_.empty()) return qmzv::to_string(num_);
  return "(" + qmzv::to_string(num_) + ")/(" + qmzv::to_string(den()) + ")";
}

}  // namespace qmzv
