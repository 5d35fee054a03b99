// Copyright 2026 The gusq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "gusq/fock_oracle.hpp"
#include "gusq/numeric.hpp"
#include "gusq/phase_space.hpp"
#include "gusq/ppm.hpp"
#include "gusq/srm.hpp"

namespace gusq {
namespace {

ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = g(rng);
    for (int j = 0; j < i; ++j) {
      h(i, j) = cplx(g(rng), g(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

void BM_JacobiEigen(benchmark::State& state) {
  const ComplexMatrix h = random_hermitian(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigendecomposition(h));
}
BENCHMARK(BM_JacobiEigen)->RangeMultiplier(2)->Range(4, 64);

void BM_SrmGeneric(benchmark::State& state) {
  const GramMatrix g = ppm_gram(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(srm_generic(g));
}
BENCHMARK(BM_SrmGeneric)->RangeMultiplier(2)->Range(2, 64);

void BM_SrmCirculant(benchmark::State& state) {
  const ComplexVector row = ppm_gram(static_cast<int>(state.range(0)), 0.3).first_row();
  for (auto _ : state) benchmark::DoNotOptimize(srm_circulant(row));
}
BENCHMARK(BM_SrmCirculant)->RangeMultiplier(2)->Range(2, 64);

void BM_FockOracle(benchmark::State& state) {
  const SingleModeParams p{1.0, kPi, cplx(1.0, 0.0)};
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_overlap(SingleModeParams::vacuum(), p, dim));
}
BENCHMARK(BM_FockOracle)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_Williamson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RealMatrix a = RealMatrix::Random(2 * n, 2 * n);
  const RealMatrix cov = a * a.transpose() + 2.0 * RealMatrix::Identity(2 * n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(williamson(cov));
}
BENCHMARK(BM_Williamson)->DenseRange(1, 4);

}  // namespace
}  // namespace gusq

BENCHMARK_MAIN();
