#include <benchmark/benchmark.h>

#include <vector>

#include "drw/product.hpp"
#include "drw/pseudoval.hpp"
#include "drw/sampling.hpp"
#include "drw/witt_oracle.hpp"

namespace {

std::vector<drw::DRWElement> sample(unsigned p, std::size_t n, std::size_t count, drw::SampleBounds bounds = {}) {
  drw::Context ctx{p, n, 6};
  std::vector<drw::DRWElement> xs;
  for (std::size_t t = 0; t < count; ++t) {
    drw::Sampler s(ctx, drw::trial_seed(42, t), bounds);
    xs.push_back(s.element());
  }
  return xs;
}

void BM_Multiply(benchmark::State& state) {
  auto xs = sample(static_cast<unsigned>(state.range(0)), static_cast<std::size_t>(state.range(1)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_Multiply)->Args({2, 1})->Args({2, 3})->Args({3, 3});

void BM_MultiplyBasicIntegral(benchmark::State& state) {
  auto xs = sample(2, 3, 64, drw::SampleBounds{8, 0, 1});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 7) % 64]);
    ++i;
  }
}
BENCHMARK(BM_MultiplyBasicIntegral);

void BM_ExpandH(benchmark::State& state) {
  drw::Context ctx{3, 3, 6};
  std::vector<drw::Rational> q{drw::Rational(3), drw::Rational(9), drw::Rational(1)};
  auto a = drw::WeightFunction::from_rationals(3, q);
  auto h = drw::HElement::make(a, {0, 1, 2}).second;
  for (auto _ : state) benchmark::DoNotOptimize(drw::expand_h(ctx, h));
}
BENCHMARK(BM_ExpandH);

void BM_Zeta(benchmark::State& state) {
  auto xs = sample(2, 3, 64);
  const drw::Rational eps(1, 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(drw::zeta(xs[i++ % 64], eps));
}
BENCHMARK(BM_Zeta);

void BM_OracleDegree0(benchmark::State& state) {
  drw::Context ctx{2, 2, 3};
  drw::Sampler s(ctx, 9, drw::SampleBounds{4, 2, 4});
  auto x = s.degree0();
  auto y = s.degree0();
  for (auto _ : state) benchmark::DoNotOptimize(drw::witt_mul(drw::eval_degree0(x), drw::eval_degree0(y)));
}
BENCHMARK(BM_OracleDegree0);

}  // namespace
BENCHMARK_MAIN();
