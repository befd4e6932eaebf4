#include <benchmark/benchmark.h>

#include "tsirelson/engine.hpp"
#include "tsirelson/oracle.hpp"
#include "tsirelson/sample.hpp"
#include "tsirelson/schreier.hpp"

namespace {

using namespace tsirelson;

// Dense support starting at position `first`.
FinVec dense(std::size_t size, Pos first, std::uint64_t seed) {
  VectorSampler sampler(seed);
  FinVec x;
  for (std::size_t i = 0; i < size; ++i) x.set(first + static_cast<Pos>(i), sampler.entry());
  return x;
}

void BM_Tsirelson(benchmark::State& state) {
  const FinVec x = dense(static_cast<std::size_t>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(engine::tsirelson(x).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Tsirelson)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond)->Complexity();

// Starting past the support size lifts the part cap, the cheap regime.
void BM_TsirelsonLateStart(benchmark::State& state) {
  const FinVec x = dense(static_cast<std::size_t>(state.range(0)), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(engine::tsirelson(x).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TsirelsonLateStart)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ImplicitLevelTwo(benchmark::State& state) {
  const FinVec x = dense(static_cast<std::size_t>(state.range(0)), 2, 2);
  const NormDef def = defs::implicit(2, Scalar(1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(engine::eval(x, def).value);
}
BENCHMARK(BM_ImplicitLevelTwo)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_SeminormJN(benchmark::State& state) {
  const FinVec x = dense(static_cast<std::size_t>(state.range(0)), 2, 3);
  const NormDef def = defs::seminorm_jn(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(engine::eval(x, def).value);
}
BENCHMARK(BM_SeminormJN)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_CertificateCheck(benchmark::State& state) {
  const FinVec x = dense(static_cast<std::size_t>(state.range(0)), 2, 4);
  const NormResult r = engine::tsirelson(x);
  const NormDef def = defs::tsirelson();
  for (auto _ : state) benchmark::DoNotOptimize(check_certificate(x, def, r.certificate));
}
BENCHMARK(BM_CertificateCheck)->RangeMultiplier(2)->Range(8, 64);

void BM_OracleTsirelson(benchmark::State& state) {
  const FinVec x = dense(static_cast<std::size_t>(state.range(0)), 2, 5);
  const NormDef def = defs::tsirelson();
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_norm(x, def));
}
BENCHMARK(BM_OracleTsirelson)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SchreierNorm(benchmark::State& state) {
  const FinVec x = dense(static_cast<std::size_t>(state.range(0)), 2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(engine::schreier_norm(x, 2));
}
BENCHMARK(BM_SchreierNorm)->RangeMultiplier(2)->Range(8, 32);

void BM_Membership(benchmark::State& state) {
  std::vector<Pos> f;
  for (Pos p = 4; p < 4 + state.range(0); ++p) f.push_back(p);
  for (auto _ : state) benchmark::DoNotOptimize(schreier::is_member(f, 3));
}
BENCHMARK(BM_Membership)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
