// Copyright 2026 The jetflow Authors.
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

#include <memory>
#include <random>

#include <benchmark/benchmark.h>

#include "jetflow/hankel.hpp"
#include "jetflow/jet.hpp"
#include "jetflow/pushforward.hpp"
#include "jetflow/sampling.hpp"
#include "jetflow/vectorfield.hpp"

using namespace jetflow;

static void BM_JetMul(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  auto table = std::make_shared<const MultiIndexTable>(d, order);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> a(table->size()), b(table->size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = {u(rng), u(rng)};
    b[i] = {u(rng), u(rng)};
  }
  const Jet x(table, a), y(table, b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_JetMul)->Args({1, 8})->Args({2, 8})->Args({3, 6});

static void BM_EstimatePushforward(benchmark::State& state) {
  const auto N = static_cast<Eigen::Index>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const MapExpr f = parse_map("0.3*z1 + 0.1*z1^2", 1, 1);
  const RealVector p = RealVector::Zero(1);
  const RealPoints X = draw_samples(MeasureSpec::uniform_box(1, 0.5), N, SamplingScheme::kHalton, 0);
  const SampleSet S = make_sample_set(X, p, f, SampleSet::Provenance::kHalton, 0);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_pushforward(p, ComplexVector::Zero(1), 3, n, S));
}
BENCHMARK(BM_EstimatePushforward)->Args({1000, 6})->Args({4000, 8})->Unit(benchmark::kMillisecond);

static void BM_SmallestEigenvalue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int bits = static_cast<int>(state.range(1));
  const RationalMatrix D = moment_matrix_exact(MeasureSpec::uniform_box(1, 1.0), n);
  for (auto _ : state) benchmark::DoNotOptimize(smallest_eigenvalue(D, bits));
}
BENCHMARK(BM_SmallestEigenvalue)->Args({10, 128})->Args({20, 256})->Unit(benchmark::kMillisecond);

static void BM_MatrixLog(benchmark::State& state) {
  const auto r = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  ComplexMatrix C = ComplexMatrix::Identity(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) C(i, j) += cplx(u(rng), u(rng)) / static_cast<double>(r);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_log(C));
}
BENCHMARK(BM_MatrixLog)->Arg(6)->Arg(21)->Arg(45);

BENCHMARK_MAIN();
