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

#include "graphsoftmax/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"

namespace graphsoftmax {

namespace {

void check_dims(std::size_t got, const NormalizedAdjacency& adj, std::string_view what) {
  if (got != adj.size()) {
    throw Error(ErrorKind::kDimension,
                fmt::format("{} has length {} but the graph has {} nodes", what, got, adj.size()));
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double squared_norm(std::span<const double> a) { return dot(a, a); }

// r = (I - A~) x
void residual(std::span<const double> x, const NormalizedAdjacency& adj, std::span<double> r) {
  spmv(adj.matrix(), x, r);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - r[i];
}

double penalty(double residual_sq, const SolverConfig& cfg) {
  if (cfg.tv_variant == TvVariant::kSquaredNorm) return 0.5 * residual_sq;
  return std::sqrt(residual_sq + cfg.tv_smoothing * cfg.tv_smoothing);
}

}  // namespace

TvVariant parse_tv_variant(std::string_view name) {
  if (name == "norm") return TvVariant::kNorm;
  if (name == "squared_norm") return TvVariant::kSquaredNorm;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown tv variant '{}'", name));
}

InitKind parse_init_kind(std::string_view name) {
  if (name == "softmax_of_z") return InitKind::kSoftmaxOfZ;
  if (name == "uniform") return InitKind::kUniform;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown init '{}'", name));
}

std::string_view to_string(TvVariant variant) {
  return variant == TvVariant::kNorm ? "norm" : "squared_norm";
}

std::string_view to_string(InitKind init) {
  return init == InitKind::kSoftmaxOfZ ? "softmax_of_z" : "uniform";
}

void SolverConfig::validate() const {
  const auto require = [](bool ok, std::string_view msg) {
    if (!ok) throw Error(ErrorKind::kInvalidArgument, std::string(msg));
  };
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be >= 0");
  require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0");
  require(max_iters >= 1, "max_iters must be >= 1");
  require(std::isfinite(tol) && tol > 0.0, "tol must be > 0");
  require(std::isfinite(tv_smoothing) && tv_smoothing > 0.0, "tv_smoothing must be > 0");
  require(std::isfinite(log_floor) && log_floor > 0.0, "log_floor must be > 0");
}

double logsumexp(std::span<const double> v) {
  if (v.empty()) throw Error(ErrorKind::kInvalidArgument, "logsumexp of an empty vector");
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double e : v) s += std::exp(e - m);
  return m + std::log(s);
}

SimplexPoint softmax(std::span<const double> z) {
  if (z.empty()) throw Error(ErrorKind::kInvalidArgument, "softmax of an empty vector");
  for (double e : z) {
    if (!std::isfinite(e)) throw Error(ErrorKind::kNumeric, "non-finite logit");
  }
  const double m = *std::max_element(z.begin(), z.end());
  std::vector<double> x(z.size());
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    x[i] = std::exp(z[i] - m);
    s += x[i];
  }
  for (double& e : x) e /= s;
  return SimplexPoint(std::move(x));
}

double graph_tv(std::span<const double> x, const NormalizedAdjacency& adj) {
  check_dims(x.size(), adj, "x");
  std::vector<double> r(x.size());
  residual(x, adj, r);
  return std::sqrt(squared_norm(r));
}

double objective(std::span<const double> x, std::span<const double> z,
                 const NormalizedAdjacency& adj, const SolverConfig& cfg) {
  check_dims(x.size(), adj, "x");
  check_dims(z.size(), adj, "logits");
  double f = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f -= x[i] * z[i];
    if (x[i] != 0.0) f += x[i] * std::log(std::max(x[i], cfg.log_floor));
  }
  if (cfg.lambda != 0.0) {
    std::vector<double> r(x.size());
    residual(x, adj, r);
    f += cfg.lambda * penalty(squared_norm(r), cfg);
  }
  return f;
}

std::vector<double> gradient(std::span<const double> x, std::span<const double> z,
                             const NormalizedAdjacency& adj, const SolverConfig& cfg) {
  check_dims(x.size(), adj, "x");
  check_dims(z.size(), adj, "logits");
  const std::size_t n = x.size();
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = -z[i] + 1.0 + std::log(std::max(x[i], cfg.log_floor));
  }
  if (cfg.lambda == 0.0) return g;

  std::vector<double> r(n);
  std::vector<double> back(n);
  residual(x, adj, r);
  // (I - A~)^T r
  spmv_transpose(adj.matrix(), r, back);
  double scale = cfg.lambda;
  if (cfg.tv_variant == TvVariant::kNorm) scale /= penalty(squared_norm(r), cfg);
  for (std::size_t i = 0; i < n; ++i) g[i] += scale * (r[i] - back[i]);
  return g;
}

SolveResult graph_softmax(std::span<const double> z, const NormalizedAdjacency& adj,
                          const SolverConfig& cfg) {
  cfg.validate();
  check_dims(z.size(), adj, "logits");
  if (z.empty()) throw Error(ErrorKind::kInvalidArgument, "empty logits");

  const std::size_t n = z.size();
  std::vector<double> x = cfg.init == InitKind::kSoftmaxOfZ
                              ? softmax(z).release()
                              : std::vector<double>(n, 1.0 / static_cast<double>(n));

  SolveResult result;
  std::vector<double> step(n);
  for (int t = 1; t <= cfg.max_iters; ++t) {
    const std::vector<double> g = gradient(x, z, adj, cfg);
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(g[i])) {
        throw Error(ErrorKind::kNumeric,
                    fmt::format("non-finite gradient at component {} (check log_floor)", i));
      }
      step[i] = x[i] - cfg.alpha * g[i];
    }
    std::vector<double> next = project_simplex(step).release();

    double gap_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) gap_sq += (next[i] - x[i]) * (next[i] - x[i]);
    const double gap = std::sqrt(gap_sq);
    x = std::move(next);

    result.iterations = t;
    result.trace.push_back(gap);
    result.objectives.push_back(objective(x, z, adj, cfg));
    if (gap < cfg.tol) {
      result.converged = true;
      break;
    }
  }
  result.objective_final = result.objectives.back();
  result.x = SimplexPoint(std::move(x));
  return result;
}

std::vector<Index> top_k_indices(std::span<const double> x, std::size_t k) {
  std::vector<Index> order(x.size());
  std::iota(order.begin(), order.end(), Index{0});
  k = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](Index a, Index b) { return x[a] > x[b] || (x[a] == x[b] && a < b); });
  order.resize(k);
  return order;
}

std::vector<std::pair<std::string, double>> top_k(const SimplexPoint& x, const Vocabulary& vocab,
                                                  std::size_t k) {
  if (x.size() != vocab.size()) {
    throw Error(ErrorKind::kDimension,
                fmt::format("distribution has {} entries but vocabulary has {}", x.size(),
                            vocab.size()));
  }
  if (k < 1 || k > x.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("k = {} outside [1, {}]", k, x.size()));
  }
  std::vector<std::pair<std::string, double>> out;
  out.reserve(k);
  for (Index id : top_k_indices(x.values(), k)) out.emplace_back(vocab.word(id), x[id]);
  return out;
}

}  // namespace graphsoftmax
