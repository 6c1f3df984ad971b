#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qmzv/cycmod.hpp"
#include "qmzv/errors.hpp"
#include "qmzv/hsum.hpp"
#include "qmzv/linalg.hpp"
#include "qmzv/ratfun.hpp"

namespace qmzv {
namespace {

Poly poly(std::initializer_list<long> c) { return Poly(c); }

CycModElement element(unsigned p, unsigned n, std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<Rational> c(static_cast<std::size_t>(n) * (p - 1));
  for (auto& x : c) x = coeff(rng);
  return {p, n, Poly(c)};
}

TEST(QInt, SmallValues) {
  EXPECT_EQ(q_int(1), poly({1}));
  EXPECT_EQ(q_int(2), poly({1, 1}));
  EXPECT_EQ(q_int(5).eval(Rational(1)), Rational(5));
}

TEST(QBinom, SmallValues) {
  EXPECT_EQ(q_binom(7, 0), poly({1}));
  EXPECT_EQ(q_binom(2, 1), poly({1, 1}));
  // [4][3] = q_binom(4,2) [2][1]
  EXPECT_EQ(q_binom(4, 2) * q_int(2) * q_int(1), q_int(4) * q_int(3));
  EXPECT_EQ(q_binom(4, 2), poly({1, 1, 2, 1, 1}));
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(Poly::monomial(Rational(1), 5), 5, 1).residue(), poly({1}));
  EXPECT_TRUE(reduce(q_int(7).pow(3), 7, 3).is_zero());
  EXPECT_EQ(reduce(poly({1, 1}), 5, 1).residue(), poly({1, 1}));
  EXPECT_THROW(reduce(Poly::constant(make_rational(1, 5)), 5, 1), IntegralityError);
}

TEST(Reduce, QToThePIdentity) {
  for (unsigned p = 2; p <= 50; ++p) {
    const Poly lhs = Poly::monomial(Rational(1), p);
    EXPECT_EQ(lhs, Poly::one() - (Poly::one() - Poly::q()) * q_int(p)) << p;
  }
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(q_pow_p(p, n), reduce(Poly::monomial(Rational(1), p), p, n));
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inv(CycModElement::one(7, 2)), CycModElement::one(7, 2));
  const CycModElement two = reduce(q_int(2), 5, 1);
  const CycModElement i = inv(two);
  EXPECT_EQ(i * two, CycModElement::one(5, 1));
  EXPECT_EQ(i.residue(), poly({0, -1, 0, -1}));
  EXPECT_THROW(inv(reduce(q_int(5), 5, 2)), NotInvertibleError);
}

TEST(Inverse, ClosedFormExamples) {
  EXPECT_EQ(inv_qint_closed_form(1, 11, 3), CycModElement::one(11, 3));
  EXPECT_EQ(inv_qint_closed_form(2, 5, 1).residue(), poly({0, -1, 0, -1}));
}

TEST(Inverse, ClosedFormMatchesEuclid) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned m = 1; m < p; ++m)
        EXPECT_EQ(inv_qint_closed_form(m, p, n), inv(reduce(q_int(m), p, n))) << m << " " << p << " " << n;
}

TEST(EvalAtOne, Examples) {
  EXPECT_EQ(eval_at_one_mod(reduce(q_int(2), 7, 2)), 2);
  EXPECT_EQ(eval_at_one_mod(reduce(Poly::q(), 7, 3)), 1);
  // H_4(1) = 25/12
  EXPECT_EQ(oracle::harmonic_sum(4, Index{1}), make_rational(25, 12));
  EXPECT_EQ(eval_at_one_mod(hsum_mod(Variant::plain, 5, 1, Index{1})), 0);
}

TEST(RingLaws, RandomElements) {
  std::mt19937 rng(12345);
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = element(p, n, rng), b = element(p, n, rng), c = element(p, n, rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
      }
}

TEST(RingLaws, ProjectionCommutesWithOperations) {
  std::mt19937 rng(777);
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned n = 1; n <= 2; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = element(p, n + 1, rng), b = element(p, n + 1, rng);
        EXPECT_EQ((a * b).project(n), a.project(n) * b.project(n));
        EXPECT_EQ((a + b).project(n), a.project(n) + b.project(n));
        EXPECT_EQ((a - b).project(n), a.project(n) - b.project(n));
      }
}

TEST(RingLaws, EvalAtOneIsAHomomorphism) {
  std::mt19937 rng(99);
  for (unsigned p : {3u, 5u, 7u, 11u})
    for (unsigned n = 1; n <= 3; ++n) {
      Integer pn;
      mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = element(p, n, rng), b = element(p, n, rng);
        const Integer ea = eval_at_one_mod(a), eb = eval_at_one_mod(b);
        Integer prod = (ea * eb) % pn, sum = (ea + eb) % pn;
        EXPECT_EQ(eval_at_one_mod(a * b), prod);
        EXPECT_EQ(eval_at_one_mod(a + b), sum);
      }
      EXPECT_EQ(eval_at_one_mod(CycModElement::one(p, n)), 1);
    }
}

TEST(Constants, SpecialElements) {
  for (unsigned p : {5u, 7u})
    for (unsigned n = 1; n <= 3; ++n) {
      EXPECT_EQ(q_pow_minus_p(p, n) * q_pow_p(p, n), CycModElement::one(p, n));
      EXPECT_TRUE(qint_p(p, n).pow(n).is_zero());
      EXPECT_FALSE(qint_p(p, n).pow(n - 1).is_zero());
      EXPECT_EQ(one_minus_q(p, n).residue(), poly({1, -1}));
    }
}

TEST(Rational, FractionStrings) {
  EXPECT_EQ(to_fraction_string(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_fraction_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("-3/2"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_TRUE(is_p_integral(make_rational(1, 6), 5));
  EXPECT_FALSE(is_p_integral(make_rational(1, 10), 5));
}

TEST(Rational, Stirling2) {
  for (unsigned j = 0; j <= 12; ++j) EXPECT_EQ(stirling2(j, j), 1);
  for (unsigned n = 1; n <= 12; ++n) {
    EXPECT_EQ(stirling2(n, 0), 0);
    for (unsigned k = 1; k <= n; ++k)
      EXPECT_EQ(stirling2(n, k), Integer(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1)) << n << "," << k;
  }
}

TEST(RatFun, CanonicalForm) {
  const RatFun x = RatFun(q_int(6)) / RatFun(q_int(3));
  EXPECT_TRUE(x.is_polynomial());
  EXPECT_EQ(x.num(), poly({1, 0, 0, 1}));
  const RatFun y = RatFun::qint_inverse_power(4, 2);
  EXPECT_EQ(y * RatFun(q_int(4).pow(2)), RatFun(1));
  EXPECT_EQ(y.den().leading(), Rational(1));
}

TEST(IntegerProduct, LargeOperandsMatchRationalProduct) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  for (std::size_t na : {3u, 12u, 40u, 200u})
    for (std::size_t nb : {1u, 12u, 90u}) {
      std::vector<Rational> a(na), b(nb);
      for (auto& x : a) x = coeff(rng);
      for (auto& x : b) x = coeff(rng);
      const Poly pa(a), pb(b);
      EXPECT_EQ(to_rational_poly(to_int_poly(pa) * to_int_poly(pb)), pa * pb) << na << "x" << nb;
    }
}

TEST(LinearAlgebra, IdentityMatrix) {
  RationalMatrix id(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  EXPECT_EQ(rank(id), 3u);
  EXPECT_TRUE(nullspace(id).empty());
  EXPECT_TRUE(left_nullspace(id).empty());
}

TEST(LinearAlgebra, RandomMatricesMatchTextbookElimination) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> small(-3, 3), den(1, 4), pick(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix m(20, std::vector<Rational>(30));
    // Low-rank products keep the rank interesting.
    const int inner = 5 + trial % 12;
    RationalMatrix a(20, std::vector<Rational>(inner)), b(inner, std::vector<Rational>(30));
    for (auto& r : a)
      for (auto& x : r) x = pick(rng) ? Rational(0) : make_rational(small(rng), den(rng));
    for (auto& r : b)
      for (auto& x : r) x = make_rational(small(rng), den(rng));
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 30; ++j)
        for (int t = 0; t < inner; ++t) m[i][j] += a[i][t] * b[t][j];
    const std::size_t r = rank(m);
    EXPECT_EQ(r, oracle::rank(m));
    RationalMatrix scaled = m;
    for (std::size_t i = 0; i < scaled.size(); ++i)
      for (auto& x : scaled[i]) x *= make_rational(static_cast<long>(i) + 2, 3);
    EXPECT_EQ(rank(scaled), r);
    const auto left = left_nullspace(m);
    EXPECT_EQ(left.size(), m.size() - r);
    for (const auto& v : left)
      for (int j = 0; j < 30; ++j) {
        Rational s = 0;
        for (int i = 0; i < 20; ++i) s += v[i] * m[i][j];
        EXPECT_EQ(s, 0);
      }
    const auto right = nullspace(m);
    EXPECT_EQ(right.size(), 30 - r);
    for (const auto& v : right)
      for (int i = 0; i < 20; ++i) {
        Rational s = 0;
        for (int j = 0; j < 30; ++j) s += m[i][j] * v[j];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(LinearAlgebra, RationalReconstruction) {
  const Integer m = Integer(kMersenne61);
  const Rational x = make_rational(-355, 113);
  const auto back = rational_reconstruct(mod_rational(x, m), m);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, x);
  EXPECT_EQ(crt(Integer(2), Integer(3), Integer(3), Integer(5)), 8);
}

}  // namespace
}  // namespace qmzv
