#include <benchmark/benchmark.h>

#include <random>

#include "hypcurve/blaschke.hpp"
#include "hypcurve/intersection.hpp"
#include "hypcurve/operators.hpp"
#include "hypcurve/pick.hpp"
#include "hypcurve/poly.hpp"

using namespace hypcurve;

namespace {

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1p-53;
}

Complex disk_point(std::mt19937_64& gen, double rmax) {
  double r = rmax * std::sqrt(uniform01(gen));
  double a = 6.283185307179586 * uniform01(gen);
  return Complex(r * std::cos(a), r * std::sin(a));
}

BlaschkeProduct product(std::mt19937_64& gen, int degree) {
  std::vector<Complex> zs;
  for (int i = 0; i < degree; ++i) zs.push_back(disk_point(gen, 0.8));
  return BlaschkeProduct(std::move(zs));
}

void BM_Roots(benchmark::State& state) {
  std::mt19937_64 gen(1);
  std::vector<Complex> zs;
  for (int i = 0; i < state.range(0); ++i) zs.push_back(disk_point(gen, 2.0));
  UniPoly p = UniPoly::from_roots(zs);
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_Roots)->Arg(8)->Arg(16)->Arg(36);

void BM_CurvePoly(benchmark::State& state) {
  std::mt19937_64 gen(2);
  auto f = product(gen, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coincidence_curve(f));
}
BENCHMARK(BM_CurvePoly)->Arg(2)->Arg(4)->Arg(8);

void BM_Resultant(benchmark::State& state) {
  std::mt19937_64 gen(3);
  int d = static_cast<int>(state.range(0));
  BiPoly F = shear(coincidence_curve(product(gen, d)), Complex(0.7, 0.2));
  BiPoly G = shear(coincidence_curve(product(gen, d)), Complex(0.7, 0.2));
  for (auto _ : state) benchmark::DoNotOptimize(resultant_w(F, G));
}
BENCHMARK(BM_Resultant)->Arg(2)->Arg(3)->Arg(4);

void BM_SolvePair(benchmark::State& state) {
  std::mt19937_64 gen(4);
  int d = static_cast<int>(state.range(0));
  BlaschkePair pair{product(gen, d), product(gen, d)};
  SolveOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(solve_pair(pair, opts));
}
BENCHMARK(BM_SolvePair)->Arg(2)->Arg(3)->Arg(4);

void BM_PickSolvable(benchmark::State& state) {
  std::mt19937_64 gen(5);
  PickProblem p;
  for (int i = 0; i < state.range(0); ++i) {
    p.nodes.push_back(disk_point(gen, 0.8));
    p.targets.push_back(disk_point(gen, 0.8));
  }
  for (auto _ : state) benchmark::DoNotOptimize(solvable(p));
}
BENCHMARK(BM_PickSolvable)->Arg(4)->Arg(16);

void BM_NumericalRadius(benchmark::State& state) {
  std::mt19937_64 gen(6);
  int d = static_cast<int>(state.range(0));
  Matrix M(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      M(i, j) = Complex(uniform01(gen) - 0.5, uniform01(gen) - 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(M));
}
BENCHMARK(BM_NumericalRadius)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
