#include <benchmark/benchmark.h>

#include "vlp/criteria.hpp"
#include "vlp/modular.hpp"
#include "vlp/rearrangement.hpp"
#include "vlp/spec_format.hpp"

using namespace vlp;

namespace {

void BM_NormConstant(benchmark::State& state) {
  const auto f = parse_function_spec("f(t)=t on (0,1) inc");
  const auto p = parse_exponent_spec("p(t)=3 on (0,1)");
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(f, p).value);
}
BENCHMARK(BM_NormConstant)->Unit(benchmark::kMicrosecond);

void BM_NormVariable(benchmark::State& state) {
  const auto f = parse_function_spec("f(t)=ln(1/t) on (0,1) dec");
  const auto p = parse_exponent_spec("p(t)=1+ln(1-ln t) on (0,1) dec");
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(f, p).value);
}
BENCHMARK(BM_NormVariable)->Unit(benchmark::kMillisecond);

void BM_RearrangeExact(benchmark::State& state) {
  const auto f = parse_function_spec("f(t)=ln(1/t) on (0, exp(-1)) dec");
  for (auto _ : state) benchmark::DoNotOptimize(rearrange(f)(0.1));
}
BENCHMARK(BM_RearrangeExact)->Unit(benchmark::kMicrosecond);

void BM_RearrangeInversion(benchmark::State& state) {
  const auto f = parse_function_spec("f(t)=t on (0,0.3) inc; 0.3+sin(t) on (0.3,1) inc; 2-t on (1,2) dec");
  for (auto _ : state) benchmark::DoNotOptimize(rearrange(f)(0.5));
}
BENCHMARK(BM_RearrangeInversion)->Unit(benchmark::kMillisecond);

void BM_RearrangeNumeric(benchmark::State& state) {
  const auto f = parse_function_spec("f(t)=2+sin(1/t) on (0,1)");
  RearrangeOptions opt;
  opt.grid.points_per_piece = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rearrange(f, opt)(0.5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RearrangeNumeric)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity()->Unit(benchmark::kMillisecond);

void BM_EndpointLimit(benchmark::State& state) {
  const auto p = parse_exponent_spec("p(t)=2*sqrt(ln(1/t)) on (0, exp(-1)) dec");
  const auto q = parse_exponent_spec("q(t)=sqrt(ln(1/t)) on (0, exp(-1)) dec");
  const auto g = combine(p, &q.function(), DerivedKind::difference_over_product);
  for (auto _ : state) benchmark::DoNotOptimize(endpoint_limit(g).outcome);
}
BENCHMARK(BM_EndpointLimit)->Unit(benchmark::kMillisecond);

void BM_EndpointLimitNumeric(benchmark::State& state) {
  const auto g = parse_function_spec("g(t)=(2+sin(1/t))*t on (0,1)");
  for (auto _ : state) benchmark::DoNotOptimize(endpoint_limit(g).outcome);
}
BENCHMARK(BM_EndpointLimitNumeric)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
