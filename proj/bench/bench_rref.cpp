// rref (OpenMP row updates) against rref_serial on random sparse integer matrices.
#include <benchmark/benchmark.h>

#include <random>

#include "tautilt/exactla.hpp"

using tautilt::Mat;

namespace {

Mat random_sparse(int n, int density_pct) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pct(0, 99), val(-3, 3);
  Mat m(n, n + n / 8);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (pct(rng) < density_pct) m(i, j) = val(rng);
  return m;
}

template <tautilt::Echelon (*F)(const Mat&)>
void bm(benchmark::State& state) {
  const Mat m = random_sparse(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(F(m));
  state.counters["rows"] = static_cast<double>(m.rows());
}

void args(benchmark::internal::Benchmark* b) {
  for (int n : {40, 80, 120}) b->Args({n, 5});
  b->Args({80, 30});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(bm<tautilt::rref>)->Name("rref")->Apply(args);
BENCHMARK(bm<tautilt::rref_serial>)->Name("rref_serial")->Apply(args);

BENCHMARK_MAIN();
