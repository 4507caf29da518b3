#include <benchmark/benchmark.h>

#include <random>

#include "qspectra/toric.hpp"

using namespace qspectra;

namespace {

long rnd(std::mt19937& g, long lo, long hi) {
  return lo + static_cast<long>(g() % static_cast<unsigned long>(hi - lo + 1));
}

IntMatrix random_matrix(std::mt19937& g, std::size_t rows, std::size_t cols) {
  IntMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = rnd(g, -9, 9);
  return M;
}

std::shared_ptr<const CoefficientGroup> bench_group() {
  return std::make_shared<const CoefficientGroup>(
      Int(0), std::vector<GroupGenerator>{{"q", Int(0)}, {"z", Int(3)}});
}

BicharMatrix random_bichar(std::mt19937& g, std::size_t n,
                           std::shared_ptr<const CoefficientGroup> grp) {
  std::vector<IntMatrix> mats(grp->size(), IntMatrix(n, n));
  for (std::size_t k = 0; k < grp->size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        long e = rnd(g, -3, 3);
        mats[k].at(i, j) = e;
        mats[k].at(j, i) = -e;
      }
  return BicharMatrix(n, std::move(grp), std::move(mats));
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 g(42);
  std::size_t n = state.range(0);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(g, n, n));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_HermiteNormalForm(benchmark::State& state) {
  std::mt19937 g(43);
  std::size_t n = state.range(0);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(g, n, n));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite_normal_form(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_KernelWithCongruences(benchmark::State& state) {
  std::mt19937 g(44);
  std::size_t n = state.range(0);
  IntMatrix M = random_matrix(g, n, n);
  Lattice full = Lattice::full(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_with_congruences(M, Int(3), full));
  }
}
BENCHMARK(BM_KernelWithCongruences)->Arg(4)->Arg(8)->Arg(16);

void BM_Radical(benchmark::State& state) {
  std::mt19937 g(45);
  std::size_t n = state.range(0);
  BicharMatrix B = random_bichar(g, n, bench_group());
  for (auto _ : state) {
    benchmark::DoNotOptimize(radical(B, {}));
  }
}
BENCHMARK(BM_Radical)->Arg(4)->Arg(8)->Arg(12);

void BM_EnumerateStrata(benchmark::State& state) {
  std::mt19937 g(46);
  std::size_t n = state.range(0);
  BicharMatrix B = random_bichar(g, n, bench_group());
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_strata(B));
  }
}
BENCHMARK(BM_EnumerateStrata)->Arg(6)->Arg(8)->Arg(10);

void BM_BuildCocycle(benchmark::State& state) {
  std::mt19937 g(47);
  std::size_t n = state.range(0);
  BicharMatrix B = random_bichar(g, n, bench_group());
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cocycle(B));
  }
}
BENCHMARK(BM_BuildCocycle)->Arg(8)->Arg(16);

void BM_MapPoint(benchmark::State& state) {
  std::mt19937 g(48);
  std::size_t n = state.range(0);
  std::vector<GroupGenerator> gens = {{"q", Int(0)}, {"z", Int(3)}};
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back({"l" + std::to_string(i + 1), Int(0)});
  auto grp = std::make_shared<const CoefficientGroup>(Int(0), gens);
  BicharMatrix B = random_bichar(g, n, grp);
  Cocycle C = build_cocycle(B);
  std::vector<std::optional<KElement>> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = KElement::generator(grp, 2 + i);
  Point p(grp, std::move(coords));
  for (auto _ : state) {
    benchmark::DoNotOptimize(map_point(B, C, p));
  }
}
BENCHMARK(BM_MapPoint)->Arg(4)->Arg(8);

void BM_SameFibre(benchmark::State& state) {
  std::mt19937 g(49);
  std::size_t n = state.range(0);
  auto grp = std::make_shared<const CoefficientGroup>(
      Int(0), std::vector<GroupGenerator>{{"q", Int(3)}});
  BicharMatrix B = random_bichar(g, n, grp);
  std::vector<std::optional<KElement>> ca(n), cb(n);
  for (std::size_t i = 0; i < n; ++i) {
    ca[i] = KElement::generator(grp, 0, rnd(g, 0, 2));
    cb[i] = KElement::generator(grp, 0, rnd(g, 0, 2));
  }
  Point a(grp, ca), b(grp, cb);
  for (auto _ : state) {
    benchmark::DoNotOptimize(same_fibre(B, a, b));
  }
}
BENCHMARK(BM_SameFibre)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
