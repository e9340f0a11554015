#include <vector>

#include <benchmark/benchmark.h>

#include "padiceq/equiangular.hpp"
#include "padiceq/hensel.hpp"
#include "padiceq/polynomial.hpp"
#include "padiceq/search.hpp"

namespace {

using namespace padiceq;

Matrix random_symmetric(std::size_t d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Vector> vs;
  for (std::size_t j = 0; j < d + 2; ++j) vs.push_back(random_vector(rng, Prime(5), d, 9, 2));
  return frame_operator(vs);
}

void BM_CharPoly(benchmark::State& state) {
  const Matrix m = random_symmetric(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 12, 2);

void BM_RationalRoots(benchmark::State& state) {
  Polynomial f{Rational(1)};
  SplitMix64 rng(2);
  for (int i = 0; i < state.range(0); ++i) f = f * Polynomial::linear_factor(random_rational(rng, Prime(3), 40, 3));
  for (auto _ : state) benchmark::DoNotOptimize(rational_roots(f));
}
BENCHMARK(BM_RationalRoots)->DenseRange(2, 10, 2);

void BM_NewtonPolygon(benchmark::State& state) {
  const Polynomial f = char_poly(random_symmetric(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(newton_polygon(f, Prime(5)));
}
BENCHMARK(BM_NewtonPolygon)->DenseRange(2, 12, 2);

void BM_HenselRoots(benchmark::State& state) {
  // x^2 - 2 has two simple roots in Q_p for these primes.
  const Polynomial f{Rational(-2), Rational(0), Rational(1)};
  const Prime p(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_padic_roots(f, p));
}
BENCHMARK(BM_HenselRoots)->Arg(7)->Arg(17)->Arg(1009)->Arg(65521);

void BM_Certify(benchmark::State& state) {
  const Configuration cfg(Prime(5), {{Rational::parse("3/5"), Rational::parse("4/5")}, {Rational(1), Rational(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(certify(cfg));
}
BENCHMARK(BM_Certify);

void BM_Search(benchmark::State& state) {
  const SearchSpace space = SearchSpace::with_defaults(Prime(5), 3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_search(space));
}
BENCHMARK(BM_Search)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
