#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qmzv/dense_poly.hpp"
#include "qmzv/errors.hpp"
#include "qmzv/rational.hpp"

namespace qmzv {

Poly q_int(unsigned n) {
  if (n == 0) throw DomainError("q_int requires n >= 1");
  return Poly(std::vector<Rational>(n, Rational(1)));
}

Poly q_binom(unsigned n, unsigned m) {
  if (m > n) throw DomainError("q_binom requires m <= n");
  Poly num = Poly::one(), den = Poly::one();
  for (unsigned j = 1; j <= m; ++j) {
    num = num * q_int(n - j + 1);
    den = den * q_int(j);
  }
  auto [quot, rem] = divmod_monic(num, den);
  if (!rem.is_zero()) throw std::logic_error("q_binom: inexact division");
  return quot;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const long db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const Rational lead_inv = 1 / b.leading();
  std::vector<Rational> quot(r.size() - static_cast<std::size_t>(db));
  for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
    Rational t = r[static_cast<std::size_t>(i)] * lead_inv;
    if (sgn(t) == 0) continue;
    const std::size_t base = static_cast<std::size_t>(i - db);
    quot[base] = t;
    for (long j = 0; j <= db; ++j) r[base + static_cast<std::size_t>(j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

namespace {
Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}
}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(), s1{};
  Poly t0{}, t1 = Poly::one();
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = s0 - quot * s1;
    Poly t2 = t0 - quot * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational li = 1 / r0.leading();
  return {r0 * li, s0 * li, t0 * li};
}

IntPoly to_int_poly(const Poly& p) {
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw DomainError("to_int_poly: non-integral coefficient");
    v.push_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

Poly to_rational_poly(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return Poly(std::move(v));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (sgn(c) < 0) os << "-";
    else if (!first) os << "+";
    first = false;
    const bool unit = (a == 1);
    if (i == 0 || !unit) {
      if (a.get_den() == 1) os << a.get_num().get_str();
      else os << "(" << a.get_str() << ")";
    }
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace qmzv

namespace qmzv::detail {

namespace {

std::size_t max_bits(const mpz_class* a, std::size_t n) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, mpz_sizeinbase(a[i].get_mpz_t(), 2));
  return m;
}

// sum a_i 2^{B i}, with signed a_i.
mpz_class pack(const mpz_class* a, std::size_t n, std::size_t bits) {
  mpz_class pos = 0, neg = 0, t;
  for (std::size_t i = 0; i < n; ++i) {
    const int sg = sgn(a[i]);
    if (sg == 0) continue;
    mpz_abs(t.get_mpz_t(), a[i].get_mpz_t());
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), bits * i);
    if (sg > 0) mpz_ior(pos.get_mpz_t(), pos.get_mpz_t(), t.get_mpz_t());
    else mpz_ior(neg.get_mpz_t(), neg.get_mpz_t(), t.get_mpz_t());
  }
  return pos - neg;
}

}  // namespace

void convolve_add(const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb, mpz_class* out) {
  if (na < 12 || nb < 12) {
    for (std::size_t i = 0; i < na; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < nb; ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return;
  }
  std::size_t len_bits = 1;
  while ((std::size_t{1} << len_bits) < std::min(na, nb)) ++len_bits;
  const std::size_t bits = max_bits(a, na) + max_bits(b, nb) + len_bits + 2;
  mpz_class c = pack(a, na, bits) * pack(b, nb, bits);
  mpz_class r;
  const std::size_t n = na + nb - 1;
  // Balanced digits in base 2^bits.
  for (std::size_t i = 0; i < n; ++i) {
    mpz_fdiv_r_2exp(r.get_mpz_t(), c.get_mpz_t(), bits);
    if (mpz_tstbit(r.get_mpz_t(), bits - 1)) {
      mpz_class full;
      mpz_setbit(full.get_mpz_t(), bits);
      r -= full;
    }
    c -= r;
    mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), bits);
    out[i] += r;
  }
}

}  // namespace qmzv::detail
