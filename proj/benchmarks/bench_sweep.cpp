#include "radsolve/cli.hpp"

#include <benchmark/benchmark.h>

using namespace radsolve;

namespace {

void sweep_square_shift(benchmark::State &state) {
  cli::SweepSpec s;
  s.template_text = "sqrt(x^2-1)+sqrt(x^2+1)=b*x";
  s.param = "b";
  s.lo = -3;
  s.hi = 3;
  s.step = Rational(1, 20);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cli::run_sweep(s, threads));
}

} // namespace

BENCHMARK(sweep_square_shift)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
