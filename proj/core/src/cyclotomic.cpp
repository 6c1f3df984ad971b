#include <mutex>

#include "qmzv/errors.hpp"
#include "qmzv/ratfun.hpp"

namespace qmzv {

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

const Poly& cyclotomic(unsigned d) {
  if (d == 0) throw DomainError("cyclotomic(0)");
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  Poly num = Poly::monomial(Rational(1), d) - Poly::one();
  for (unsigned e : divisors(d)) {
    if (e == d) break;
    num = divmod_monic(num, cyclotomic(e)).first;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(d, std::move(num)).first->second;
}

}  // namespace qmzv
