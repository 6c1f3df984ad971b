#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qmzv/hsum.hpp"

namespace qmzv {
namespace {

const unsigned kPrimes[] = {3, 5, 7, 11, 13};

std::vector<Index> indices_up_to(unsigned w) {
  std::vector<Index> out;
  for (unsigned v = 1; v <= w; ++v)
    for (auto& k : compositions(v)) out.push_back(k);
  return out;
}

TEST(Hsum, AndrewsInstance) {
  EXPECT_EQ(hsum_mod(Variant::plain, 5, 1, Index{1}).residue(), Poly({2, -2}));
}

TEST(Hsum, DepthAboveLengthVanishes) { EXPECT_TRUE(hsum_mod(Variant::plain, 2, 1, Index{1, 1}).is_zero()); }

TEST(Hsum, BarIsGeneralizedWithUnitExponents) {
  for (unsigned p : {5u, 7u})
    for (unsigned n = 1; n <= 2; ++n)
      for (const auto& k : indices_up_to(4))
        EXPECT_EQ(hsum_mod(Variant::bar, p, n, k),
                  hsum_mod(Variant::generalized, p, n, k, ExpVector(std::vector<unsigned>(k.depth(), 1))));
}

TEST(Hsum, MatchesTupleEnumeration) {
  for (unsigned p : {5u, 7u})
    for (unsigned n = 1; n <= 2; ++n)
      for (const auto& k : indices_up_to(3)) {
        std::vector<unsigned> plain_s;
        for (unsigned x : k.parts()) plain_s.push_back(x - 1);
        EXPECT_EQ(hsum_mod(Variant::plain, p, n, k), oracle::hsum_mod(p, n, k, ExpVector(plain_s))) << k.to_string();
        EXPECT_EQ(hsum_mod(Variant::star, p, n, k), oracle::hsum_mod(p, n, k, ExpVector(plain_s), true));
        const ExpVector ones_s(std::vector<unsigned>(k.depth(), 1));
        EXPECT_EQ(hsum_mod(Variant::bar, p, n, k), oracle::hsum_mod(p, n, k, ones_s));
        const ExpVector zero_s(std::vector<unsigned>(k.depth(), 0));
        EXPECT_EQ(hsum_mod(Variant::generalized, p, n, k, zero_s), oracle::hsum_mod(p, n, k, zero_s));
      }
}

TEST(HsumExact, Examples) {
  EXPECT_EQ(hsum_exact(Variant::plain, 2, Index{1}), RatFun(Poly({2, 1})) / RatFun(Poly({1, 1})));
  EXPECT_EQ(hsum_exact(Variant::plain, 6, Index{}), RatFun(1));
  EXPECT_EQ(hsum_exact(Variant::plain, 1, Index{2}), RatFun(Poly::q()));
}

TEST(HsumExact, ReducesToHsumMod) {
  for (unsigned p : {5u, 7u})
    for (const auto& k : indices_up_to(3)) {
      const RatFun f = hsum_exact(Variant::plain, p - 1, k);
      EXPECT_EQ(reduce(f.num(), p, 2) * inv(reduce(f.den(), p, 2)), hsum_mod(Variant::plain, p, 2, k));
    }
}

/// Sum of generalized sums over every merge of adjacent blocks, adding k and s within a block.
CycModElement merged_expansion(unsigned p, unsigned n, const Index& k, const std::vector<unsigned>& s) {
  CycModElement out = CycModElement::zero(p, n);
  const unsigned d = k.depth();
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<unsigned> mk{k[0]}, ms{s[0]};
    for (unsigned i = 1; i < d; ++i) {
      if (mask & (1u << (i - 1))) {
        mk.back() += k[i];
        ms.back() += s[i];
      } else {
        mk.push_back(k[i]);
        ms.push_back(s[i]);
      }
    }
    out += hsum_mod(Variant::generalized, p, n, Index(mk), ExpVector(ms));
  }
  return out;
}

TEST(Hsum, StarExpandsOverMergedBlocks) {
  for (unsigned p : kPrimes)
    for (unsigned n = 1; n <= 2; ++n)
      for (const auto& k : indices_up_to(5)) {
        std::vector<unsigned> plain_s, ones(k.depth(), 1);
        for (unsigned x : k.parts()) plain_s.push_back(x - 1);
        EXPECT_EQ(hsum_mod(Variant::star, p, n, k), merged_expansion(p, n, k, plain_s))
            << p << " " << n << " " << k.to_string();
        EXPECT_EQ(hsum_mod(Variant::bar_star, p, n, k), merged_expansion(p, n, k, ones))
            << p << " " << n << " " << k.to_string();
      }
}

TEST(Hsum, SpecializationAtOne) {
  for (unsigned p : kPrimes)
    for (unsigned n = 1; n <= 2; ++n) {
      Integer pn;
      mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
      for (const auto& k : indices_up_to(4))
        EXPECT_EQ(eval_at_one_mod(hsum_mod(Variant::plain, p, n, k)), mod_rational(oracle::harmonic_sum(p - 1, k), pn))
            << p << " " << n << " " << k.to_string();
    }
}

TEST(Hsum, PartialFractionLaw) {
  for (unsigned m = 1; m <= 10; ++m)
    for (unsigned k1 = 1; k1 <= 4; ++k1)
      for (unsigned k2 = 1; k2 <= 4; ++k2) {
        const RatFun lhs = harmonic_term(k1, k1 - 1, m) * harmonic_term(k2, k2 - 1, m);
        const RatFun rhs = harmonic_term(k1 + k2, k1 + k2 - 1, m) +
                           RatFun(Poly({1, -1})) * harmonic_term(k1 + k2 - 1, k1 + k2 - 2, m);
        EXPECT_EQ(lhs, rhs) << m << " " << k1 << " " << k2;
      }
}

TEST(Hsum, ClassicalSumMatchesEnumeration) {
  for (unsigned m = 0; m <= 9; ++m)
    for (const auto& k : indices_up_to(4)) {
      EXPECT_EQ(harmonic_sum(m, k), oracle::harmonic_sum(m, k));
      EXPECT_EQ(harmonic_sum(m, k, true), oracle::harmonic_sum(m, k, true));
    }
}

TEST(Index, HoffmanDualExamples) {
  EXPECT_EQ(hoffman_dual(Index{3, 1}), (Index{1, 1, 2}));
  EXPECT_EQ(hoffman_dual(Index{1}), (Index{1}));
  EXPECT_EQ(hoffman_dual(Index{2}), (Index{1, 1}));
}

TEST(Index, HoffmanDualProperties) {
  for (unsigned w = 1; w <= 8; ++w)
    for (const auto& k : compositions(w)) {
      const Index d = hoffman_dual(k);
      EXPECT_EQ(hoffman_dual(d), k);
      EXPECT_EQ(d.weight(), w);
      EXPECT_EQ(k.depth() + d.depth(), w + 1);
    }
}

TEST(Index, StarDecompose) {
  EXPECT_EQ(star_decompose(Index{4}), std::vector<Index>{Index{4}});
  auto two = star_decompose(Index{2, 3});
  std::sort(two.begin(), two.end());
  EXPECT_EQ(two, (std::vector<Index>{Index{2, 3}, Index{5}}));
  auto three = star_decompose(Index{1, 1, 1});
  std::sort(three.begin(), three.end());
  EXPECT_EQ(three, (std::vector<Index>{Index{1, 1, 1}, Index{1, 2}, Index{2, 1}, Index{3}}));
}

TEST(Index, BBinom) {
  EXPECT_EQ(b_binom(Index{3, 2}, ExpVector{0, 0}), 1);
  EXPECT_EQ(b_binom(Index{2}, ExpVector{1}), 2);
  EXPECT_EQ(b_binom(Index{3, 1}, ExpVector{1, 2}), 3);
}

TEST(Index, Operations) {
  EXPECT_EQ(Index({2, 1}).reversed(), (Index{1, 2}));
  EXPECT_TRUE(Index({2, 1}).prefix(0).empty());
  EXPECT_EQ(Index({2, 1}) + (ExpVector{1, 0}), (Index{3, 1}));
  EXPECT_EQ(parse_index("2,1,1"), (Index{2, 1, 1}));
  EXPECT_EQ(compositions(4).size(), 8u);
  EXPECT_EQ(exp_vectors(2, 2).size(), 3u);
}

TEST(Index, Orbits) {
  EXPECT_EQ(orbits(2, 2), (std::vector<std::vector<Index>>{{Index{1, 1}}}));
  const auto o3 = orbits(3, 2);
  ASSERT_EQ(o3.size(), 1u);
  EXPECT_EQ(o3[0].size(), 2u);
  const auto o4 = orbits(4, 2);
  ASSERT_EQ(o4.size(), 2u);
  std::size_t total = 0;
  for (const auto& o : o4) total += o.size();
  EXPECT_EQ(total, 3u);
  for (unsigned k = 1; k <= 7; ++k)
    for (unsigned d = 1; d <= k; ++d) {
      std::size_t count = 0;
      for (const auto& o : orbits(k, d)) count += o.size();
      EXPECT_EQ(count, compositions(k, d).size());
    }
}

}  // namespace
}  // namespace qmzv
