#include <benchmark/benchmark.h>

#include "sscert/chebyshev.hpp"
#include "sscert/enclosures.hpp"
#include "sscert/poly.hpp"

namespace {

void BM_ChebPolyTable(benchmark::State& state) {
  for (auto _ : state) {
    auto t = sscert::cheb_T_upto(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_ChebPolyTable)->Arg(16)->Arg(59);

void BM_ExpEnclosure(benchmark::State& state) {
  sscert::Rat x(9, 4);
  for (auto _ : state) {
    auto e = sscert::iv_exp_point(x);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_ExpEnclosure);

}  // namespace

BENCHMARK_MAIN();
