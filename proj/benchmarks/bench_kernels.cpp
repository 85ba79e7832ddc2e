// Microbenchmarks for the closure-heavy kernels: cube-term algebra
// generation, commutator fixpoints, congruence generation, the free-lattice
// comparison, and the Mal'cev term search.
#include <benchmark/benchmark.h>

#include "sdw/commutator.hpp"
#include "sdw/congruence.hpp"
#include "sdw/corpus.hpp"
#include "sdw/free_lattice.hpp"
#include "sdw/malcev.hpp"
#include "sdw/subproduct.hpp"

using namespace sdw;

static void BM_GenerateM_D4_Binary(benchmark::State& state) {
  auto d4 = corpus::dihedral4();
  std::vector<Partition> alphas{Partition::one(8), Partition::one(8)};
  for (auto _ : state) {
    auto M = generate_M(*d4, 2, alphas);
    benchmark::DoNotOptimize(M.size());
  }
}
BENCHMARK(BM_GenerateM_D4_Binary);

static void BM_Commutator_D4_Ternary(benchmark::State& state) {
  auto d4 = corpus::dihedral4();
  std::vector<Partition> alphas(3, Partition::one(8));
  for (auto _ : state) {
    CommutatorEngine engine(d4);  // fresh engine: no memo hits
    benchmark::DoNotOptimize(engine.commutator(alphas).block_count());
  }
}
BENCHMARK(BM_Commutator_D4_Ternary);

static void BM_Commutator_RingZ8_Ternary(benchmark::State& state) {
  auto z8 = corpus::ring_zn(8);
  std::vector<Partition> alphas(3, Partition::one(8));
  for (auto _ : state) {
    CommutatorEngine engine(z8);
    benchmark::DoNotOptimize(engine.commutator(alphas).block_count());
  }
}
BENCHMARK(BM_Commutator_RingZ8_Ternary);

static void BM_Cg_Principal_SignTriple(benchmark::State& state) {
  auto s3 = corpus::symmetric3();
  std::vector<int> sgn = corpus::s3_signs();
  ProductCodec codec({6, 6, 6});
  std::vector<std::int64_t> elements;
  for (El g = 0; g < 6; ++g)
    for (El h = 0; h < 6; ++h)
      for (El k = 0; k < 6; ++k)
        if ((sgn[static_cast<size_t>(g)] + sgn[static_cast<size_t>(h)] +
             sgn[static_cast<size_t>(k)]) % 2 == 0)
          elements.push_back(codec.encode(std::vector<El>{g, h, k}));
  AlgebraPtr C =
      SubproductAlgebra::from_elements({s3, s3, s3}, std::move(elements)).as_algebra();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cg(*C, {{0, 1}}).block_count());
  }
}
BENCHMARK(BM_Cg_Principal_SignTriple);

static void BM_Whitman_XyzChain(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LatticeTermArena arena;
    WhitmanSolver w(arena);
    XyzTriple lo = xyz_sequence(arena, n);
    XyzTriple hi = xyz_sequence(arena, n + 1);
    benchmark::DoNotOptimize(w.leq(lo.x, hi.x));
    benchmark::DoNotOptimize(w.leq(hi.x, lo.x));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Whitman_XyzChain)->DenseRange(2, 8, 2);

static void BM_MalcevSearch_S3(benchmark::State& state) {
  auto s3 = corpus::symmetric3();
  for (auto _ : state) {
    MalcevOutcome out = find_malcev_term(*s3);
    benchmark::DoNotOptimize(out.explored);
  }
}
BENCHMARK(BM_MalcevSearch_S3);

BENCHMARK_MAIN();
