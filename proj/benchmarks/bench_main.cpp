#include <benchmark/benchmark.h>

#include <vector>

#include "nodehunt/exactla.hpp"
#include "nodehunt/fields.hpp"
#include "nodehunt/hunt.hpp"
#include "nodehunt/lift.hpp"
#include "nodehunt/poly.hpp"
#include "nodehunt/rng.hpp"

using namespace nodehunt;

static void BM_SingularPointsHesse(benchmark::State& state) {
  const auto& f = field_create(static_cast<std::uint64_t>(state.range(0)));
  const FqPoly g = parse_poly_over("x0^3 + x1^3 + x2^3 + x0*x1*x2", f, 3);
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(g));
}
BENCHMARK(BM_SingularPointsHesse)->Arg(7)->Arg(31)->Arg(101);

static void BM_NullspaceGFp(benchmark::State& state) {
  const auto& f = field_create(1000003);
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  Matrix<FiniteField> m(FiniteField(f), n - 3, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(static_cast<std::int64_t>(rng.below(f.p())));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_NullspaceGFp)->Arg(20)->Arg(60)->Arg(120);

static void BM_LiftRational(benchmark::State& state) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 1000003; primes.size() < static_cast<std::size_t>(state.range(0)); p += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (prime) primes.push_back(p);
  }
  const mpq_class q(mpz_class(-987'653), mpz_class(999'983));
  std::vector<mpz_class> residues;
  for (auto p : primes) residues.emplace_back(static_cast<unsigned long>(reduce_rational(q, p)));
  for (auto _ : state) benchmark::DoNotOptimize(lift_rational(primes, residues));
}
BENCHMARK(BM_LiftRational)->Arg(4)->Arg(10)->Arg(40);
BENCHMARK_MAIN();
