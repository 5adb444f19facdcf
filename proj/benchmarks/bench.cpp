#include <benchmark/benchmark.h>

#include <random>

#include "hwb/asph.hpp"
#include "hwb/classify.hpp"
#include "hwb/report.hpp"
#include "hwb/spec_algebra.hpp"

using namespace hwb;

namespace {

std::shared_ptr<const HeckeContext> g2_ctx() {
  static const auto ctx = [] {
    auto d = RootDatum::preset("G2");
    return make_context(d, ParameterFunction::by_length(*d));
  }();
  return ctx;
}

std::shared_ptr<const ChevalleyBasis> g2_cb() {
  static const auto cb =
      std::make_shared<const ChevalleyBasis>(ChevalleyBasis::build(RootDatum::preset("G2")));
  return cb;
}

void BM_HeckeMultiply(benchmark::State& state) {
  auto ctx = g2_ctx();
  std::mt19937_64 rng(1);
  auto a = random_hecke(ctx, rng, 2, 3);
  auto b = random_hecke(ctx, rng, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_HeckeMultiply);

void BM_Demazure(benchmark::State& state) {
  auto ctx = g2_ctx();
  std::mt19937_64 rng(2);
  auto f = random_element(*ctx, rng, 4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(demazure(*ctx->datum, 0, f));
}
BENCHMARK(BM_Demazure);

void BM_QuotientRingBuild(benchmark::State& state) {
  auto d = RootDatum::preset("G2");
  for (auto _ : state) {
    QuotientRing R(d, {Rat(2), Rat(3)});
    benchmark::DoNotOptimize(R.dim());
  }
}
BENCHMARK(BM_QuotientRingBuild);

void BM_FiberCount(benchmark::State& state) {
  G2Geometry geo(std::make_shared<GF>(static_cast<int>(state.range(0))), g2_cb());
  auto x = geo.parse_rep("v2ab+vb");
  for (auto _ : state) benchmark::DoNotOptimize(geo.fiber_point_count(x));
}
BENCHMARK(BM_FiberCount)->Arg(1)->Arg(2);

void BM_StabilizerDim(benchmark::State& state) {
  G2Geometry geo(std::make_shared<GF>(2), g2_cb());
  auto x = geo.parse_rep("v2ab+vb");
  for (auto _ : state) benchmark::DoNotOptimize(geo.stabilizer_dim(x));
}
BENCHMARK(BM_StabilizerDim);

void BM_ClassifyExample1(benchmark::State& state) {
  auto cb = g2_cb();
  const auto a = example1_character();
  for (auto _ : state)
    benchmark::DoNotOptimize(fixed_space_classify(cb, a, static_cast<int>(state.range(0)), false));
}
BENCHMARK(BM_ClassifyExample1)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
