#include "qmzv/linalg.hpp"

#include <algorithm>

namespace qmzv {

namespace {

using IntRow = std::vector<Integer>;

Integer common_denominator(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

IntRow clear_denominators(const std::vector<Rational>& row) {
  const Integer l = common_denominator(row);
  IntRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i].get_num() * (l / row[i].get_den());
  return out;
}

void make_primitive(IntRow& row, IntRow* comb) {
  Integer g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (comb)
    for (const auto& x : *comb) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g <= 1) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  if (comb)
    for (auto& x : *comb) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::optional<std::vector<Integer>> IntegerEchelon::insert(std::vector<Integer> row) {
  const std::size_t id = inserted_++;
  std::vector<Integer> comb;
  if (track_) {
    comb.assign(id + 1, Integer(0));
    comb[id] = 1;
  }
  eliminate(row, track_ ? &comb : nullptr);
  std::size_t piv = 0;
  while (piv < row.size() && sgn(row[piv]) == 0) ++piv;
  if (piv == row.size()) return comb;
  basis_.push_back(std::move(row));
  pivots_.push_back(piv);
  if (track_) combos_.push_back(std::move(comb));
  return std::nullopt;
}

std::vector<Integer> IntegerEchelon::reduce(std::vector<Integer> row) const {
  eliminate(row, nullptr);
  return row;
}

void IntegerEchelon::eliminate(std::vector<Integer>& row, std::vector<Integer>* comb) const {
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t pc = pivots_[b];
    if (pc >= row.size() || sgn(row[pc]) == 0) continue;
    Integer a = basis_[b][pc], c = row[pc];
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    a /= g;
    c /= g;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (sgn(row[i]) != 0) row[i] *= a;
      if (i < basis_[b].size() && sgn(basis_[b][i]) != 0)
        mpz_submul(row[i].get_mpz_t(), c.get_mpz_t(), basis_[b][i].get_mpz_t());
    }
    if (comb) {
      for (auto& x : *comb) x *= a;
      const auto& cb = combos_[b];
      for (std::size_t i = 0; i < cb.size(); ++i)
        if (sgn(cb[i]) != 0) mpz_submul((*comb)[i].get_mpz_t(), c.get_mpz_t(), cb[i].get_mpz_t());
    }
    make_primitive(row, comb);
  }
}

std::size_t rank(const RationalMatrix& m) {
  IntegerEchelon e;
  for (const auto& row : m) e.insert(clear_denominators(row));
  return e.rank();
}

RationalMatrix left_nullspace(const RationalMatrix& m) {
  IntegerEchelon e(true);
  RationalMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto dep = e.insert(clear_denominators(m[i]));
    if (!dep) continue;
    // dep combines the scaled rows l_j * m[j].
    std::vector<Rational> v(m.size());
    const Integer lead = (*dep)[i] * common_denominator(m[i]);
    for (std::size_t j = 0; j < dep->size(); ++j) {
      v[j] = Rational((*dep)[j] * common_denominator(m[j]), lead);
      v[j].canonicalize();
    }
    out.push_back(std::move(v));
  }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return {};
  RationalMatrix t(m[0].size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RationalMatrix nullspace(const RationalMatrix& m) {
  if (m.empty()) return {};
  return left_nullspace(transpose(m));
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

Integer crt(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2) {
  Integer inv;
  mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  Integer k = ((r2 - r1) % m2) * inv % m2;
  if (k < 0) k += m2;
  Integer out = r1 + m1 * k;
  Integer mm = m1 * m2;
  out %= mm;
  if (out < 0) out += mm;
  return out;
}

}  // namespace qmzv
