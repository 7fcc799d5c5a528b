#include <benchmark/benchmark.h>

#include <random>

#include "mapoly/ansatz.hpp"
#include "mapoly/ma_verifier.hpp"
#include "mapoly/poly.hpp"

using namespace mapoly;

namespace {

PolyQ random_poly(int nvars, int degree, int terms, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> var(0, nvars - 1), coeff(-9, 9), deg(0, degree);
  std::vector<PolyQ::Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    for (int k = deg(gen); k > 0; --k) ++e[var(gen)];
    out.emplace_back(Monomial::from_exponents(e), Rat(coeff(gen)));
  }
  return PolyQ(nvars, std::move(out));
}

void BM_Mul(benchmark::State& state) {
  const PolyQ f = random_poly(4, 6, static_cast<int>(state.range(0)), 1);
  const PolyQ g = random_poly(4, 6, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_Mul)->Arg(10)->Arg(40)->Arg(160);

void BM_MulTruncated(benchmark::State& state) {
  const PolyQ f = random_poly(4, 6, 160, 1), g = random_poly(4, 6, 160, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MulTruncated)->Arg(2)->Arg(4)->Arg(8);

void BM_Pow(benchmark::State& state) {
  const PolyQ s = simplex_solution(4);
  for (auto _ : state) benchmark::DoNotOptimize(pow(s, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Pow)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<std::vector<PolyQ>> m(k, std::vector<PolyQ>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = random_poly(3, 2, 4, 100 + i * k + j);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 5);

void BM_Residual(benchmark::State& state) {
  const PolyQ s = simplex_solution(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(residual(s));
}
BENCHMARK(BM_Residual)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ResidualTruncated(benchmark::State& state) {
  const ParamPoly s = lift(simplex_solution(6));
  for (auto _ : state) benchmark::DoNotOptimize(residual(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ResidualTruncated)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_VerifySampled(benchmark::State& state) {
  VerifyOptions o;
  o.mode = VerifyMode::Sampled;
  const PolyQ s = simplex_solution(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_solution(s, o));
}
BENCHMARK(BM_VerifySampled)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace
