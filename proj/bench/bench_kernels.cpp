#include <benchmark/benchmark.h>

#include "symknot/bracket.hpp"
#include "symknot/diagram.hpp"
#include "symknot/seifert.hpp"
#include "symknot/signature.hpp"

using namespace symknot;

namespace {

// 10_140 closure: 11 crossings, 2^11 states.
const char* kBraid = "braid[4]{-1,-1,-1,2,1,1,1,2,3,-2,3}";

void BM_BracketAllStatesSerial(benchmark::State& state) {
  const Diagram d = braid_closure(parse_braid(kBraid));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_all_states_serial(d));
}

void BM_BracketAllStatesParallel(benchmark::State& state) {
  const Diagram d = braid_closure(parse_braid(kBraid));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_all_states(d));
}

void BM_BracketTransfer(benchmark::State& state) {
  const Diagram d = braid_closure(parse_braid(kBraid));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_transfer(d));
}

std::vector<UnitCirclePoint> grid(int n) {
  std::vector<UnitCirclePoint> pts;
  for (int i = 1; i <= n; ++i)
    pts.push_back(UnitCirclePoint::from_cosine(AlgebraicReal::from_rational(Rational(2 * i - 1 - n, n)), true));
  return pts;
}

void BM_SignaturesSerial(benchmark::State& state) {
  const SignatureForm form(seifert_matrix(parse_braid(kBraid)));
  const auto pts = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signatures_at_serial(form, pts));
}

void BM_SignaturesParallel(benchmark::State& state) {
  const SignatureForm form(seifert_matrix(parse_braid(kBraid)));
  const auto pts = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signatures_at(form, pts));
}

}  // namespace

BENCHMARK(BM_BracketAllStatesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketAllStatesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketTransfer)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignaturesSerial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignaturesParallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
