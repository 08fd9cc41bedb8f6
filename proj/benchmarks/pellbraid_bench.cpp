#include <benchmark/benchmark.h>

#include "pellbraid/closed_forms.hpp"
#include "pellbraid/identities.hpp"
#include "pellbraid/oracle.hpp"
#include "pellbraid/padic.hpp"
#include "pellbraid/sequences.hpp"

namespace {

using namespace pellbraid;

void BM_TermPell(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(term(SequenceKind::Pell, n));
}
BENCHMARK(BM_TermPell)->Arg(64)->Arg(512)->Arg(2048)->Arg(8192);

void BM_TermsRange(benchmark::State& state) {
  const std::int64_t count = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(terms(SequenceKind::Balancing, 0, count));
}
BENCHMARK(BM_TermsRange)->Arg(256)->Arg(2048);

void BM_GammaPower(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_power(n));
}
BENCHMARK(BM_GammaPower)->Arg(512)->Arg(8192);

void BM_CurlClosed(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(curl_closed({SequenceKind::Cobalancing, k, 1}));
}
BENCHMARK(BM_CurlClosed)->Arg(12)->Arg(200);

void BM_CurlOracle(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(curl_oracle(SequenceKind::Pell, k, 2, 64));
}
BENCHMARK(BM_CurlOracle)->Arg(4)->Arg(40);

void BM_SigmaSweep(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sigma(bound, bound));
}
BENCHMARK(BM_SigmaSweep)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Nu2Sweep(benchmark::State& state) {
  const std::int64_t k_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_nu2_pell(k_max));
}
BENCHMARK(BM_Nu2Sweep)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_ConjectureScan(benchmark::State& state) {
  const std::int64_t k_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_scan(k_max));
}
BENCHMARK(BM_ConjectureScan)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
