#include "radsolve/oracle.hpp"
#include "radsolve/parser.hpp"
#include "radsolve/roots.hpp"
#include "radsolve/solver.hpp"

#include <benchmark/benchmark.h>

using namespace radsolve;

namespace {

Polynomial wilkinson_like(int n) {
  Polynomial p{1};
  for (int k = 1; k <= n; ++k)
    p = p * Polynomial{Rational(-k, 3), 1};
  return p;
}

void isolate_product_of_linears(benchmark::State &state) {
  const Polynomial p = wilkinson_like(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(isolate_real_roots(p));
}

void isolate_irrational_quartic(benchmark::State &state) {
  const Polynomial p = to_rational_function(parse_expression("63*x^4-64")).num();
  for (auto _ : state)
    benchmark::DoNotOptimize(isolate_real_roots(p));
}

void solve_random(benchmark::State &state) {
  const Form form = static_cast<Form>(state.range(0));
  std::vector<RadicalEquation> eqs;
  for (std::uint64_t i = 0; i < 64; ++i)
    eqs.push_back(random_equation(derive_seed(11, i), form, 2));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(solve(eqs[i++ % eqs.size()]));
  state.SetLabel(form_name(form));
}

void parse_and_solve(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(solve(parse_radical_equation("sqrt(x+1)+sqrt(x-1)=sqrt(x+2)")));
}

void scan_wide_grid(benchmark::State &state) {
  const RadicalEquation eq = parse_radical_equation("sqrt(x+1)+sqrt(x-1)=sqrt(x+2)");
  for (auto _ : state)
    benchmark::DoNotOptimize(scan(eq, -50, 50, 1e-3));
}

} // namespace

BENCHMARK(isolate_product_of_linears)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(isolate_irrational_quartic);
BENCHMARK(solve_random)->DenseRange(0, 6);
BENCHMARK(parse_and_solve);
BENCHMARK(scan_wide_grid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
