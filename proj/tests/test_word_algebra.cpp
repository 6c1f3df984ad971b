#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "qmzv/hsum.hpp"
#include "qmzv/linalg.hpp"
#include "qmzv/word_algebra.hpp"

namespace qmzv {
namespace {

const Poly kOneMinusQ({1, -1});

PolySum sum(std::initializer_list<std::pair<Word, Poly>> terms) {
  PolySum s;
  for (const auto& [w, c] : terms) s.add(w, c);
  return s;
}

std::vector<Word> words_up_to(unsigned w) {
  std::vector<Word> out{Word{}};
  for (unsigned v = 1; v <= w; ++v)
    for (auto& k : compositions(v)) out.push_back(k);
  return out;
}

TEST(Stuffle, Examples) {
  EXPECT_EQ(stuffle(Word{1}, Word{1}), sum({{Word{1, 1}, Poly({2})}, {Word{2}, Poly({1})}}));
  EXPECT_EQ(stuffle(Word{2, 1}, Word{}), PolySum(Word{2, 1}));
  EXPECT_EQ(stuffle(Word{2}, Word{1}), sum({{Word{2, 1}, Poly({1})}, {Word{1, 2}, Poly({1})}, {Word{3}, Poly({1})}}));
}

TEST(QStuffle, Examples) {
  EXPECT_EQ(q_stuffle(Word{2}, Word{3}), sum({{Word{2, 3}, Poly({1})},
                                              {Word{3, 2}, Poly({1})},
                                              {Word{5}, Poly({1})},
                                              {Word{4}, kOneMinusQ}}));
  EXPECT_EQ(q_stuffle(Word{1}, Word{1}),
            sum({{Word{1, 1}, Poly({2})}, {Word{2}, Poly({1})}, {Word{1}, kOneMinusQ}}));
  EXPECT_EQ(q_stuffle(Word{3, 1}, Word{}), PolySum(Word{3, 1}));
}

TEST(StuffleStar, Examples) {
  EXPECT_EQ(stuffle_star(Word{1}, Word{1}), sum({{Word{1, 1}, Poly({2})}, {Word{2}, Poly({-1})}}));
  EXPECT_EQ(stuffle_star(Word{}, Word{1, 2}), PolySum(Word{1, 2}));
}

TEST(Products, CommutativeAndAssociative) {
  std::mt19937 rng(31337);
  const auto words = words_up_to(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  using Fn = PolySum (*)(const PolySum&, const PolySum&);
  const Fn products[] = {static_cast<Fn>(stuffle), static_cast<Fn>(q_stuffle), static_cast<Fn>(stuffle_star)};
  for (int trial = 0; trial < 40; ++trial) {
    const PolySum a(words[pick(rng)]), b(words[pick(rng)]), c(words[pick(rng)]);
    for (Fn f : products) {
      EXPECT_EQ(f(a, b), f(b, a));
      EXPECT_EQ(f(f(a, b), c), f(a, f(b, c)));
    }
  }
}

TEST(QStuffle, RecoversStuffleAtQEqualsOne) {
  for (const auto& a : words_up_to(4))
    for (const auto& b : words_up_to(4)) EXPECT_EQ(q_stuffle(a, b).at_q_one(), stuffle(a, b));
}

TEST(QStuffle, EvaluationHomomorphismAgainstExactProducts) {
  for (const auto& a : words_up_to(3))
    for (const auto& b : words_up_to(3)) {
      if (a.weight() + b.weight() > 4) continue;
      for (unsigned m = 0; m <= 7; ++m)
        EXPECT_EQ(evaluate_hsum(q_stuffle(a, b), m),
                  hsum_exact(Variant::plain, m, a) * hsum_exact(Variant::plain, m, b))
            << a.to_string() << " o " << b.to_string() << " m=" << m;
    }
}

TEST(QStuffle, EvaluationHomomorphismSweep) {
  EXPECT_TRUE(q_stuffle_homomorphism_holds(Word{2, 1}, Word{1}, 20));
  EXPECT_TRUE(q_stuffle_homomorphism_sweep(4, 20).empty());
}

TEST(QStuffle, DroppingTheCorrectionFails) { EXPECT_FALSE(q_stuffle_homomorphism_sweep(2, 5, true).empty()); }

TEST(RelationSpace, WeightOne) {
  const RelationMatrix m = relation_space(1);
  EXPECT_EQ(m.columns, std::vector<Word>{Word{1}});
  EXPECT_EQ(rank(m.rows), 1u);
  EXPECT_EQ(dim_word_quotient(1), 0u);
}

TEST(RelationSpace, QuotientDimensions) {
  const std::size_t expected[] = {0, 0, 1, 0, 2, 1, 3, 4, 5};
  for (unsigned k = 1; k <= 9; ++k) EXPECT_EQ(dim_word_quotient(k), expected[k - 1]) << k;
}

TEST(RelationSpace, MatrixText) {
  std::ostringstream os;
  write_matrix_text(os, relation_space(2));
  const std::string text = os.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "1,1 2");
}

}  // namespace
}  // namespace qmzv
