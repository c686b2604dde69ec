// Copyright 2026 The graphsoftmax Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "graphsoftmax/graph.hpp"
#include "graphsoftmax/simplex.hpp"
#include "graphsoftmax/solver.hpp"

namespace {

using namespace graphsoftmax;

// Same shape as the test fixture: ~edges_per_row random successors per word.
ConcurrenceGraph random_graph(std::size_t n, std::size_t edges_per_row, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> word(0, n - 1);
  std::vector<Sentence> sentences;
  sentences.reserve(n * edges_per_row);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 0; e < edges_per_row; ++e) {
      sentences.push_back({"w" + std::to_string(i), "w" + std::to_string(word(rng))});
    }
  }
  return ingest_corpus(sentences);
}

std::vector<double> logits(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> z(n);
  for (double& e : z) e = normal(rng);
  return z;
}

void BM_ProjectSimplex(benchmark::State& state) {
  const auto a = logits(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(project_simplex(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProjectSimplex)->RangeMultiplier(8)->Range(64, 1 << 16)->Complexity();

void BM_Spmv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto adj = normalize(random_graph(n, 10, 2));
  const auto x = logits(n, 3);
  std::vector<double> y(n);
  for (auto _ : state) {
    spmv(adj.matrix(), std::span<const double>(x), std::span<double>(y));
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_Spmv)->Arg(1000)->Arg(50527);

void BM_GraphSoftmax(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto adj = normalize(random_graph(n, 10, 4));
  const auto z = logits(n, 5);
  SolverConfig cfg;
  cfg.tv_variant = state.range(1) ? TvVariant::kNorm : TvVariant::kSquaredNorm;
  cfg.tol = 1e-300;  // always run max_iters steps
  for (auto _ : state) benchmark::DoNotOptimize(graph_softmax(z, adj, cfg));
}
BENCHMARK(BM_GraphSoftmax)
    ->ArgsProduct({{1000, 10000, 50527}, {0, 1}})
    ->ArgNames({"N", "norm"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
