#include "qmzv/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qmzv/errors.hpp"

namespace qmzv {

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw DomainError("empty rational literal");
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + std::string(text));
  if (r.get_den() == 0) throw DomainError("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

bool is_p_integral(const Rational& x, unsigned long p) {
  return mpz_divisible_ui_p(x.get_den_mpz_t(), p) == 0;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer mod_rational(const Rational& x, const Integer& modulus) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), modulus.get_mpz_t()) == 0) {
    if (modulus == 1) return 0;
    throw NotInvertibleError("denominator not invertible modulo " + modulus.get_str());
  }
  Integer r = (x.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return r;
}

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = Integer(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

}  // namespace qmzv
