#include <benchmark/benchmark.h>

#include "qmzv/analytic.hpp"
#include "qmzv/hsum.hpp"
#include "qmzv/miner.hpp"
#include "qmzv/verify.hpp"
#include "qmzv/word_algebra.hpp"

namespace qmzv {
namespace {

void BM_HsumMod(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hsum_mod(Variant::plain, p, 3, Index{3, 1, 1}));
}
BENCHMARK(BM_HsumMod)->Arg(7)->Arg(13)->Arg(31);

void BM_ClosedFormInverse(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inv_qint_closed_form(p - 1, p, 3));
}
BENCHMARK(BM_ClosedFormInverse)->Arg(13)->Arg(97);

void BM_EuclidInverse(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  const CycModElement x = reduce(q_int(p - 1), p, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inv(x));
}
BENCHMARK(BM_EuclidInverse)->Arg(13)->Arg(97);

void BM_CyclicCheck(benchmark::State& state) {
  const auto orbit = orbits(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cyclic(11, 2, orbit[0], true));
}
BENCHMARK(BM_CyclicCheck);

void BM_QStuffle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(q_stuffle(Word{2, 1, 1}, Word{1, 3}));
}
BENCHMARK(BM_QStuffle);

void BM_WordQuotient(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dim_word_quotient(k));
}
BENCHMARK(BM_WordQuotient)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DimTilde(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dim_tilde(Family::O, k));
}
BENCHMARK(BM_DimTilde)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AlphaDirect(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_direct(Index{2}, m, 2));
}
BENCHMARK(BM_AlphaDirect)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qmzv

BENCHMARK_MAIN();
