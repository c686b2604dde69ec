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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphsoftmax/graph.hpp"
#include "graphsoftmax/simplex.hpp"

namespace graphsoftmax {

/// Penalty R(x) built on the residual r = (I - A~) x.
enum class TvVariant {
  kNorm,         // sqrt(||r||^2 + smoothing^2)
  kSquaredNorm,  // ||r||^2 / 2
};

enum class InitKind { kSoftmaxOfZ, kUniform };

TvVariant parse_tv_variant(std::string_view name);
InitKind parse_init_kind(std::string_view name);
std::string_view to_string(TvVariant variant);
std::string_view to_string(InitKind init);

struct SolverConfig {
  double lambda = 1.0;
  double alpha = 1e-4;
  int max_iters = 20;
  double tol = 1e-4;
  double tv_smoothing = 1e-12;
  double log_floor = 1e-12;
  TvVariant tv_variant = TvVariant::kSquaredNorm;
  InitKind init = InitKind::kSoftmaxOfZ;

  /// Throws kInvalidArgument when a field is out of range.
  void validate() const;
};

struct SolveResult {
  SimplexPoint x;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;      // ||x_{t+1} - x_t||_2, one entry per step
  std::vector<double> objectives; // f(x_{t+1}), one entry per step
  double objective_final = 0.0;
};

/// log sum_i exp(v_i), shifted by the maximum. Satisfies
/// max(v) <= logsumexp(v) <= max(v) + log N.
double logsumexp(std::span<const double> v);

/// Closed-form minimizer of -<x, z> + <x, log x> over the simplex.
SimplexPoint softmax(std::span<const double> z);

/// ||x - A~ x||_2.
double graph_tv(std::span<const double> x, const NormalizedAdjacency& adj);

/// f(x) = -<x, z> + <x, log max(x, log_floor)> + lambda * R(x).
double objective(std::span<const double> x, std::span<const double> z,
                 const NormalizedAdjacency& adj, const SolverConfig& cfg);

/// grad f(x) = -z + 1 + log max(x, log_floor) + lambda * grad R(x), where
/// grad R = (I - A~)^T r / sqrt(||r||^2 + smoothing^2) for kNorm and
/// (I - A~)^T r for kSquaredNorm. Only sparse products are formed.
std::vector<double> gradient(std::span<const double> x, std::span<const double> z,
                             const NormalizedAdjacency& adj, const SolverConfig& cfg);

/// Graph-regularized softmax by projected gradient descent with a fixed step:
/// x_{t+1} = P(x_t - alpha * grad f(x_t)), stopping once
/// ||x_{t+1} - x_t||_2 < tol or after max_iters steps.
///
/// Throws kDimension when z and adj disagree, kNumeric on a non-finite
/// gradient.
SolveResult graph_softmax(std::span<const double> z, const NormalizedAdjacency& adj,
                          const SolverConfig& cfg);

/// Indices of the k largest entries, descending, ties by ascending index.
std::vector<Index> top_k_indices(std::span<const double> x, std::size_t k);

/// Throws kInvalidArgument unless 1 <= k <= N and x matches the vocabulary.
std::vector<std::pair<std::string, double>> top_k(const SimplexPoint& x, const Vocabulary& vocab,
                                                  std::size_t k);

}  // namespace graphsoftmax
