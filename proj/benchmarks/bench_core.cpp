#include <benchmark/benchmark.h>

#include "conelab/decompose.hpp"
#include "conelab/exotic.hpp"

using namespace conelab;

namespace {

void BM_OctonionMul(benchmark::State& state) {
  SampleRng rng(1, 0);
  HurwitzScalar<double> x(Algebra::O), y(Algebra::O);
  for (int k = 0; k < 8; ++k) {
    x[k] = rng.gaussian();
    y[k] = rng.gaussian();
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_OctonionMul);

void BM_QuadraticFormSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto B = ExoticGenerator::build(n, Algebra::H);
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto [u, v] = sample_orthogonal_pair(n, Algebra::H, 7, i++);
    benchmark::DoNotOptimize(quadratic_form_direct(B, u, v));
  }
}
BENCHMARK(BM_QuadraticFormSample)->Arg(3)->Arg(6);

void BM_Expm(benchmark::State& state) {
  const auto B = ExoticGenerator::build(static_cast<int>(state.range(0)), Algebra::C).as_cone_map();
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm(B, 1.0));
  }
}
BENCHMARK(BM_Expm)->Arg(3)->Arg(6);

void BM_Certificate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(indecomposability_certificate(static_cast<int>(state.range(0)), Algebra::R));
  }
}
BENCHMARK(BM_Certificate)->Arg(3)->Arg(6);

void BM_DerivationDimensionOctonions(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivation_dimension(DerivationSpace::Octonions));
  }
}
BENCHMARK(BM_DerivationDimensionOctonions);

void BM_MinJordanEigenvalue(benchmark::State& state) {
  SampleRng rng(3, 0);
  HermitianMatrix<double> X(Algebra::O, 3);
  for (int l = 0; l < 3; ++l) {
    X.set_entry(l, l, HurwitzScalar<double>::real(Algebra::O, rng.gaussian()));
    for (int m = l + 1; m < 3; ++m) {
      HurwitzScalar<double> e(Algebra::O);
      for (int k = 0; k < 8; ++k) e[k] = rng.gaussian();
      X.set_entry(l, m, e);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_jordan_eigenvalue(X));
  }
}
BENCHMARK(BM_MinJordanEigenvalue);

}  // namespace

BENCHMARK_MAIN();
