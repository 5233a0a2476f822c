// Copyright 2026 The Starlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "starlift/linear_map.hpp"
#include "starlift/random.hpp"
#include "starlift/tensor.hpp"

using namespace starlift;

static void BM_OpNorm(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const CMat m = rng.complex_gaussian(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(op_norm(m));
}
BENCHMARK(BM_OpNorm)->Arg(4)->Arg(16)->Arg(64);

static void BM_Choi(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const LinearMap phi = LinearMap::conjugation(rng.unitary(n));
  for (auto _ : state) benchmark::DoNotOptimize(cp_defect(phi));
}
BENCHMARK(BM_Choi)->Arg(2)->Arg(4)->Arg(8);

static void BM_Fubini(benchmark::State& state) {
  const auto a = StarAlgebra::full(2);
  const auto t = AntiAutomorphism::transpose(2);
  const auto b = StarAlgebra::block_diagonal({2, 3});
  std::vector<CMat> a1, b1;
  for (Eigen::Index j = 0; j < 2; ++j)
    for (Eigen::Index l = 0; l < 2; ++l) {
      a1.push_back(matrix_unit(2, j, l));
      b1.push_back(matrix_unit(5, j, l));
    }
  for (auto _ : state) benchmark::DoNotOptimize(fubini(a1, b1, a, t, b).space.dim());
}
BENCHMARK(BM_Fubini)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
