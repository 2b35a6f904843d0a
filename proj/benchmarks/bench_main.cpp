#include <benchmark/benchmark.h>

#include "gradstar/content.hpp"
#include "gradstar/harness.hpp"
#include "gradstar/nagata.hpp"
#include "gradstar/parse.hpp"
#include "gradstar/registry.hpp"

using namespace gradstar;

static void BM_GroebnerVeronese(benchmark::State& st) {
  auto r = ring_named("veronese_q");
  auto I = parse_ideal("(x^2 + x*y, y^2 - x^2, x*y)", r);
  for (auto _ : st) benchmark::DoNotOptimize(groebner_basis(r, I.generators()));
}
BENCHMARK(BM_GroebnerVeronese);

static void BM_GaussCheckQ2(benchmark::State& st) {
  auto r = ring_named("poly_q2");
  auto f = parse_poly("x + y*X", r);
  auto g = parse_poly("y + x*X", r);
  for (auto _ : st) benchmark::DoNotOptimize(gauss_check(f, g));
}
BENCHMARK(BM_GaussCheckQ2);

static void BM_DmExponentLaurent(benchmark::State& st) {
  auto r = ring_named("laurent_z");
  auto f = parse_poly("2 + (t + 1)*X + 3*t*X^2", r);
  auto g = parse_poly("(t - 1) + 2*X", r);
  for (auto _ : st) benchmark::DoNotOptimize(dm_exponent(f, g));
}
BENCHMARK(BM_DmExponentLaurent);

static void BM_VClosure(benchmark::State& st) {
  auto r = ring_named("poly_q2");
  auto I = parse_ideal("(x^2, x*y)", r);
  auto v = StarOp::parse("v", r);
  for (auto _ : st) benchmark::DoNotOptimize(star_apply(v, I));
}
BENCHMARK(BM_VClosure);

static void BM_SuiteGaussCp(benchmark::State& st) {
  auto r = ring_named("laurent_z");
  for (auto _ : st) benchmark::DoNotOptimize(run_suite("gauss-cp", r, std::nullopt, 1, 20));
}
BENCHMARK(BM_SuiteGaussCp)->Unit(benchmark::kMillisecond);

static void BM_FalsifyClassicalGauss(benchmark::State& st) {
  auto r = ring_named("laurent_z");
  for (auto _ : st) benchmark::DoNotOptimize(falsify("classical-gauss", r, std::nullopt));
}
BENCHMARK(BM_FalsifyClassicalGauss)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
