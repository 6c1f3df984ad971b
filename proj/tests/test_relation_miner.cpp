#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "qmzv/errors.hpp"
#include "qmzv/miner.hpp"
#include "qmzv/vector_cache.hpp"

namespace qmzv {
namespace {

MinerOptions options(Engine e = Engine::fraction_free) {
  MinerOptions o;
  o.engine = e;
  o.cache_dir = cache_dir_from_env();
  return o;
}

Combination combo(std::initializer_list<std::pair<const char*, Rational>> terms) {
  Combination c;
  for (const auto& [d, x] : terms) c.emplace_back(parse_descriptor(d), x);
  return c;
}

std::set<std::string> names(const std::vector<GeneratorDescriptor>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(g.to_string());
  return out;
}

bool some_candidate_matches(const std::vector<RelationCandidate>& cs, const Combination& target) {
  return std::any_of(cs.begin(), cs.end(), [&](const auto& c) { return same_up_to_scalar(c.coefficients, target); });
}

const Combination kAndrews = combo({{"z(1)", 1}, {"(1-q)^1*1", make_rational(1, 2)}, {"p^1*(1-q)^1*1", make_rational(-1, 2)}});
const Combination kZeta2 = combo(
    {{"z(2)", 1}, {"(1-q)^2*1", make_rational(-1, 12)}, {"p^2*(1-q)^2*1", make_rational(1, 12)}});
const Combination kReversal2 = combo({{"z(2)", 2}, {"z(1,1)", 1}, {"(1-q)^1*z(1)", 1}});

TEST(Descriptors, RoundTripAndOrder) {
  for (Family f : {Family::O, Family::Q, Family::O2})
    for (unsigned k = 0; k <= 3; ++k) {
      const auto gs = gens(f, k);
      EXPECT_TRUE(std::is_sorted(gs.begin(), gs.end()));
      for (const auto& g : gs) {
        EXPECT_EQ(parse_descriptor(g.to_string()), g) << g.to_string();
        EXPECT_EQ(g.weight(), k) << g.to_string();
      }
    }
  EXPECT_THROW(parse_descriptor("z(1"), DomainError);
}

TEST(Gens, Examples) {
  EXPECT_EQ(names(gens(Family::O, 2)),
            (std::set<std::string>{"z(2)", "z(1,1)", "(1-q)^1*z(1)", "p^1*(1-q)^1*z(1)", "(1-q)^2*1",
                                   "p^1*(1-q)^2*1", "p^2*(1-q)^2*1"}));
  EXPECT_EQ(names(gens(Family::O, 0)), std::set<std::string>{"1"});
  EXPECT_EQ(gens(Family::O, 3).size(), 15u);
  EXPECT_EQ(gens(Family::Q, 2).size(), 14u);
  EXPECT_EQ(v_generators(Family::O, 1).size(), 2u);
}

TEST(Vectorize, LengthAndNonzero) {
  const std::vector<unsigned> s = {5, 7, 11};
  const auto v = vectorize(parse_descriptor("(1-q)^3*1"), s, 1);
  EXPECT_EQ(v.size(), 4u + 6u + 10u);
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; }));
  EXPECT_EQ(vectorize(parse_descriptor("z(2,1)"), s, 2).size(), 2 * (4u + 6u + 10u));
}

TEST(Vectorize, ResidueRouteMatchesRingRoute) {
  for (Family f : {Family::O, Family::Q, Family::O2})
    for (const auto& g : gens(f, 3))
      for (unsigned p : {7u, 11u})
        for (unsigned n = 1; n <= 2; ++n) {
          const auto r = residue_vector(g, p, n);
          const CycModElement v = value_at(g, p, n);
          const auto& c = v.residue().coeffs();
          for (std::size_t i = 0; i < r.size(); ++i)
            EXPECT_EQ(Rational(r[i]), i < c.size() ? c[i] : Rational(0)) << g.to_string();
        }
}

TEST(Vectorize, AndrewsCombinationVanishes) {
  EXPECT_TRUE(vanishes_on(kAndrews, default_primes(1), 1));
  EXPECT_TRUE(vanishes_on(kAndrews, {3, 5, 7}, 1));
  EXPECT_FALSE(vanishes_on(kAndrews, {7}, 2));
}

TEST(Primes, DefaultSet) {
  const auto s = default_primes(3);
  EXPECT_EQ(s.front(), 5u);
  EXPECT_EQ(s.back(), 97u);
  EXPECT_EQ(next_primes(97, 2), (std::vector<unsigned>{101, 103}));
}

TEST(DimTilde, Examples) {
  const DimReport o3 = dim_tilde(Family::O, 3, std::nullopt, options());
  EXPECT_EQ(o3.dim_tilde, 1u);
  EXPECT_TRUE(o3.stabilized);
  EXPECT_TRUE(o3.certified);
  EXPECT_EQ(dim_tilde(Family::O, 1, std::nullopt, options()).dim_tilde, 0u);
  const DimReport q5 = dim_tilde(Family::Q, 5, std::nullopt, options());
  EXPECT_EQ(q5.dim_tilde, 6u);
  EXPECT_TRUE(q5.stabilized);
}

TEST(DimTilde, EnlargingThePrimeSetNeverLowersRanks) {
  const std::vector<unsigned> small = {7}, medium = primes_between(6, 40), large = primes_between(6, 97);
  std::size_t full = 0, v = 0;
  for (const auto* s : {&small, &medium, &large}) {
    MinerOptions o = options();
    o.max_extensions = 0;
    const DimReport r = dim_tilde(Family::O, 5, *s, o);
    EXPECT_GE(r.rank_full, full);
    EXPECT_GE(r.rank_v, v);
    full = r.rank_full;
    v = r.rank_v;
  }
}

TEST(DimTilde, EnginesAgree) {
  for (Family f : {Family::O, Family::Q, Family::O2})
    for (unsigned k = 1; k <= 3; ++k) {
      const DimReport a = dim_tilde(f, k, std::nullopt, options(Engine::fraction_free));
      const DimReport b = dim_tilde(f, k, std::nullopt, options(Engine::modular));
      EXPECT_EQ(a.rank_full, b.rank_full) << to_string(f) << k;
      EXPECT_EQ(a.rank_v, b.rank_v) << to_string(f) << k;
      EXPECT_TRUE(b.certified);
    }
}

TEST(Relations, AndrewsAtWeightOne) {
  const auto cs = find_relations(Family::O, 1, std::nullopt, options());
  ASSERT_FALSE(cs.empty());
  EXPECT_TRUE(some_candidate_matches(cs, kAndrews));
}

TEST(Relations, WeightTwo) {
  const auto cs = find_relations(Family::O, 2, std::nullopt, options());
  EXPECT_TRUE(some_candidate_matches(cs, kZeta2));
  EXPECT_TRUE(some_candidate_matches(cs, kReversal2));
  EXPECT_TRUE(in_span(kZeta2, cs));
}

TEST(Relations, CandidatesSubstituteToZero) {
  for (Family f : {Family::O, Family::O2})
    for (unsigned k = 1; k <= 3; ++k) {
      const auto s = default_primes(k);
      for (const auto& c : find_relations(f, k, s, options())) {
        EXPECT_TRUE(c.verified);
        EXPECT_TRUE(vanishes_on(c.coefficients, s, family_n(f)));
      }
    }
}

TEST(Relations, EnginesAgree) {
  for (unsigned k = 1; k <= 3; ++k) {
    const auto a = find_relations(Family::O, k, std::nullopt, options(Engine::fraction_free));
    const auto b = find_relations(Family::O, k, std::nullopt, options(Engine::modular));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(same_up_to_scalar(a[i].coefficients, b[i].coefficients));
  }
}

TEST(Relations, TheoremDerivedRelationsLieInTheKernel) {
  // The weight-one relation times (1-q) and times p are relations of weight two.
  const auto cs = find_relations(Family::O, 2, std::nullopt, options());
  Combination shifted, scaled;
  for (auto [g, x] : kAndrews) {
    g.j += 1;
    shifted.emplace_back(g, x);
    g.h += 1;
    scaled.emplace_back(g, x);
  }
  EXPECT_TRUE(in_span(shifted, cs));
  EXPECT_TRUE(in_span(scaled, cs));
  EXPECT_TRUE(in_span(kReversal2, cs));
}

TEST(Membership, WeightFiveObservations) {
  const Combination q_target = combo({{"z(4,1;3,0)", 1}, {"z(3,1,1;2,1,0)", -1}, {"z(3,1,1;2,0,1)", -1}});
  const auto q = membership(q_target, v_generators(Family::Q, 5), default_primes(5), 1, options());
  EXPECT_TRUE(q.member);
  EXPECT_TRUE(q.certified);
  EXPECT_EQ(q.scope(), "over S");
  Combination lhs = q.coefficients;
  for (auto& [g, x] : lhs) x = -x;
  for (const auto& t : q_target) lhs.push_back(t);
  EXPECT_TRUE(vanishes_on(lhs, default_primes(5), 1));

  const Combination o_target = combo({{"z(4,1)", 1}, {"z(3,1,1)", -2}});
  const auto o = membership(o_target, v_generators(Family::O, 5), default_primes(5), 1, options());
  EXPECT_FALSE(o.member);
  EXPECT_TRUE(o.certified);
  ASSERT_FALSE(o.functional.empty());
  // The functional separates the target from every span generator.
  auto apply = [&](const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * o.functional[i];
    return s;
  };
  for (const auto& g : v_generators(Family::O, 5)) EXPECT_EQ(apply(vectorize(g, o.primes, 1)), 0);
  std::vector<Rational> t(o.functional.size());
  for (const auto& [g, x] : o_target) {
    const auto v = vectorize(g, o.primes, 1);
    for (std::size_t i = 0; i < v.size(); ++i) t[i] += x * v[i];
  }
  EXPECT_NE(apply(t), 0);
}

TEST(Membership, ZeroIsAlwaysInside) {
  const auto r = membership({}, v_generators(Family::O, 3), default_primes(3), 1, options());
  EXPECT_TRUE(r.member);
}

TEST(VectorCache, StoreAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "qmzv-cache-test";
  std::filesystem::remove_all(dir);
  VectorCache cache(dir.string());
  VectorCache::Bundle b{{"z(2)", {Integer(1), Integer(-3)}}, {"1", {Integer(7)}}};
  cache.store("p=5;n=1;w=2", b);
  EXPECT_EQ(cache.load("p=5;n=1;w=2"), b);
  EXPECT_TRUE(cache.load("p=7;n=1;w=2").empty());
  EXPECT_NE(cache.path_for("a"), cache.path_for("b"));
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  std::filesystem::remove_all(dir);
  EXPECT_FALSE(VectorCache("").enabled());
}

TEST(VectorCache, CachedRunsGiveTheSameDimensions) {
  const auto dir = std::filesystem::temp_directory_path() / "qmzv-cache-dims";
  std::filesystem::remove_all(dir);
  MinerOptions o;
  o.cache_dir = dir.string();
  const DimReport cold = dim_tilde(Family::O2, 3, std::nullopt, o);
  const DimReport warm = dim_tilde(Family::O2, 3, std::nullopt, o);
  EXPECT_EQ(cold.rank_full, warm.rank_full);
  EXPECT_EQ(cold.rank_v, warm.rank_v);
  EXPECT_EQ(cold.primes, warm.primes);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qmzv
