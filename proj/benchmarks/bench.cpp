#include <benchmark/benchmark.h>

#include "bott/data.hpp"
#include "bott/parse.hpp"
#include "bott/verify.hpp"

using namespace bott;

static void BM_PolyMultiply(benchmark::State& state) {
  Poly p = parse_poly("alpha^2 - 3*alpha*beta/2 + gamma*delta - mu1 + 2");
  Poly q = parse_poly("beta^3 + alpha*gamma - delta^2/3 + mu2*mu3");
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMultiply);

static void BM_Substitute(benchmark::State& state) {
  Poly p = parse_poly("alpha^3*beta - alpha*beta^2*gamma + mu1*alpha - mu");
  Bindings b{{Param::alpha, parse_ratfun("(mu - beta^2)/gamma")}, {Param::mu1, parse_ratfun("beta/2")}};
  for (auto _ : state) benchmark::DoNotOptimize(substitute(p, b));
}
BENCHMARK(BM_Substitute);

// one (group, distribution) instance through curvature, forms and system
static void BM_Pipeline(benchmark::State& state) {
  auto spec = catalog(static_cast<GroupId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute(spec, DistId::D1, true));
}
BENCHMARK(BM_Pipeline)->DenseRange(0, 6);

static void BM_DecideAtPoint(benchmark::State& state) {
  auto sys = compute(catalog(GroupId::G7), DistId::D1, true).system;
  Point pt{{Param::alpha, 0}, {Param::beta, 2}, {Param::gamma, 3}, {Param::delta, 1}, {Param::a0, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(decide_at_point(sys, pt));
}
BENCHMARK(BM_DecideAtPoint);

static void BM_VerifyFixtures(benchmark::State& state) {
  auto& reg = builtin_registry();
  for (auto _ : state) {
    PipelineCache cache;
    for (auto& f : reg.fixtures) benchmark::DoNotOptimize(verify_fixture(f, reg.erratum(f.id), cache));
  }
}
BENCHMARK(BM_VerifyFixtures)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  auto& reg = builtin_registry();
  VerifyOptions opt;
  opt.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(reg, opt));
}
BENCHMARK(BM_VerifyAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
