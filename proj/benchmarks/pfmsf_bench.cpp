#include <benchmark/benchmark.h>

#include <vector>

#include "pfmsf/grassmann.hpp"
#include "pfmsf/pfaffian.hpp"
#include "pfmsf/uea.hpp"

using namespace pfmsf;

namespace {

// Reverse PBW word of length state.range(0) over the n=3 basis.
void BM_NormalOrder(benchmark::State& state) {
  const std::vector<Generator> basis = canonical_basis(3);
  std::vector<Generator> word;
  for (long k = 0; k < state.range(0); ++k) word.push_back(basis[basis.size() - 1 - static_cast<std::size_t>(k) % basis.size()]);
  for (auto _ : state) benchmark::DoNotOptimize(normal_order(word));
}
BENCHMARK(BM_NormalOrder)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_NcPfaffian(benchmark::State& state) {
  const CanonicalX x = build_canonical_x(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nc_pfaffian(x.full));
}
BENCHMARK(BM_NcPfaffian)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NcMsfRhs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nc_msf_rhs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NcMsfRhs)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SymbolicPfaffian(benchmark::State& state) {
  const auto a = generic_alternating(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_SymbolicPfaffian)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MsfRhs(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const auto x = generic_anti_alternating(p, 8 - p);
  for (auto _ : state) benchmark::DoNotOptimize(msf_rhs(x));
}
BENCHMARK(BM_MsfRhs)->DenseRange(0, 8, 2)->Unit(benchmark::kMillisecond);

void BM_OmegaPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Forms<UEAElement> f = build_uea_forms(n);
  for (auto _ : state) benchmark::DoNotOptimize(power(f.omega, n));
}
BENCHMARK(BM_OmegaPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
