#include <benchmark/benchmark.h>

#include "spinorlab/bilinear.hpp"
#include "spinorlab/field_tensors.hpp"
#include "spinorlab/fock.hpp"
#include "spinorlab/rng.hpp"

using namespace spinorlab;

namespace {

const GammaRep& cached_rep(int n) {
  static std::vector<GammaRep> reps = [] {
    std::vector<GammaRep> out;
    for (int k = 1; k <= kMaxHalfDim; ++k)
      out.push_back(build_gamma_rep(k, Signature::euclidean(k)));
    return out;
  }();
  return reps[n - 1];
}

void BuildGammaRep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GammaRep rep = build_gamma_rep(n, Signature::euclidean(n));
    benchmark::DoNotOptimize(rep.volume.data());
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BuildGammaRep)->DenseRange(1, 6)->Complexity();

void CliffordCheckFull(benchmark::State& state) {
  const GammaRep& rep = cached_rep(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CliffordCheck c = check_clifford(rep);
    benchmark::DoNotOptimize(c.anticommutator);
  }
  state.SetComplexityN(1 << state.range(0));
}
BENCHMARK(CliffordCheckFull)->DenseRange(1, 6)->Complexity();

void NullPlaneKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GammaRep& rep = cached_rep(n);
  const Spinor psi = random_pure_spinor(rep, Chirality::plus, 7);
  for (auto _ : state) {
    NullPlane plane = null_plane_of(psi, rep);
    benchmark::DoNotOptimize(plane.dim);
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(NullPlaneKernel)->DenseRange(2, 6)->Complexity();

void RandomPureSpinor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GammaRep& rep = cached_rep(n);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Spinor psi = random_pure_spinor(rep, Chirality::plus, ++seed);
    benchmark::DoNotOptimize(psi.components.data());
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(RandomPureSpinor)->DenseRange(2, 6)->Complexity();

void TheoremTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GammaRep& rep = cached_rep(n);
  const Chirality partner =
      nondegenerate_partner(rep, PairingMode::transpose_intertwiner, Chirality::plus);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Spinor psi = random_pure_spinor(rep, Chirality::plus, ++seed);
    const Spinor phi = random_chiral_spinor(rep, partner, seed);
    const BilinearVector z =
        vector_bilinear(psi, phi, rep, PairingMode::transpose_intertwiner);
    benchmark::DoNotOptimize(norm_squared(z, rep.metric));
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(TheoremTrial)->DenseRange(2, 5)->Complexity();

void KernelEigenvalue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_eigenvalue(n));
}
BENCHMARK(KernelEigenvalue)->Arg(1)->Arg(5)->Arg(20);

void NystromEigs(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    NystromResult r = nystrom_cross_check(grid, 2);
    benchmark::DoNotOptimize(r.eigenvalues.data());
  }
}
BENCHMARK(NystromEigs)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
