#include <benchmark/benchmark.h>

#include "mci/corpus.hpp"
#include "mci/structure.hpp"
#include "mci/xmodinv.hpp"

using namespace mci;

namespace {

const Field F3 = Field::prime(3);

void BM_CenterHeis3(benchmark::State& state) {
  const ObjectPtr h = corpus::heis3();
  for (auto _ : state) benchmark::DoNotOptimize(center(h));
}
BENCHMARK(BM_CenterHeis3);

void BM_CommutatorS3(benchmark::State& state) {
  const ObjectPtr g = corpus::s3();
  for (auto _ : state) benchmark::DoNotOptimize(commutator(g));
}
BENCHMARK(BM_CommutatorS3);

void BM_RealizeTable(benchmark::State& state) {
  const ObjectPtr h = functor_C(corpus::xm_id(F3)).with_omegas();
  for (auto _ : state) benchmark::DoNotOptimize(realize_table(h));
}
BENCHMARK(BM_RealizeTable);

void BM_ActionConditions(benchmark::State& state) {
  const ObjectPtr c = functor_C(corpus::identity_xmod(corpus::leib2(F3))).with_omegas();
  const ActionData act = corpus::identity_xmod(c).action;
  for (auto _ : state) benchmark::DoNotOptimize(check_action_conditions(act));
}
BENCHMARK(BM_ActionConditions)->Unit(benchmark::kMillisecond);

void BM_DerivedActionSemidirect(benchmark::State& state) {
  const auto d = corpus::heis3_decomposition(F3);
  for (auto _ : state) benchmark::DoNotOptimize(is_derived_action(d.action));
}
BENCHMARK(BM_DerivedActionSemidirect);

void BM_FunctorRoundtrip(benchmark::State& state) {
  const PreCrossedModule x = corpus::xm_a3_s3();
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_check(x));
}
BENCHMARK(BM_FunctorRoundtrip);

void BM_XmodCenter(benchmark::State& state) {
  const PreCrossedModule x = corpus::xm_id();
  for (auto _ : state) benchmark::DoNotOptimize(xmod_center(x));
}
BENCHMARK(BM_XmodCenter)->Unit(benchmark::kMillisecond);

void BM_EnumerateIdealsHeis3F3(benchmark::State& state) {
  const ObjectPtr h = corpus::heis3(F3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(h));
}
BENCHMARK(BM_EnumerateIdealsHeis3F3);

void BM_JkCentral(benchmark::State& state) {
  const auto exts = corpus::extensions();
  for (auto _ : state)
    for (const auto& [name, e] : exts) benchmark::DoNotOptimize(is_jk_central(e));
}
BENCHMARK(BM_JkCentral)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
