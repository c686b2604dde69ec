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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Lines starting with "INFO" are reported but not scored.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "graphsoftmax/bleu.hpp"
#include "graphsoftmax/evaluation.hpp"
#include "graphsoftmax/graph.hpp"
#include "graphsoftmax/simplex.hpp"
#include "graphsoftmax/solver.hpp"
#include "support/dense_hessian.hpp"
#include "support/fixtures.hpp"
#include "support/simplex_oracle.hpp"

namespace gs = graphsoftmax;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double linf(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

gs::SolverConfig with(double lambda, gs::TvVariant variant) {
  gs::SolverConfig cfg;
  cfg.lambda = lambda;
  cfg.tv_variant = variant;
  return cfg;
}

// ---------------------------------------------------------------------------

Outcome simplex_projection() {
  Stopwatch clock;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  double oracle_err = 0.0;
  double kkt_err = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = gs::testing::random_vector(dim(rng), -2.0, 2.0, rng);
    const auto x = gs::project_simplex(a);
    const double gamma = gs::simplex_shift(a);
    oracle_err = std::max(oracle_err, linf(x.values(), gs::testing::project_simplex_oracle(a, 100)));
    for (std::size_t i = 0; i < a.size(); ++i) {
      kkt_err = std::max(kkt_err, x[i] > 0.0 ? std::abs(a[i] + gamma - x[i])
                                             : std::max(0.0, a[i] + gamma));
    }
  }
  const double t = clock.seconds();
  return {oracle_err <= 0.01 && kkt_err <= 1e-9 && t < 10.0,
          fmt::format("1000 vectors, oracle linf {:.3e} (<= 1e-2), KKT {:.3e} (<= 1e-9), {:.2f} s "
                      "(< 10 s)",
                      oracle_err, kkt_err, t)};
}

Outcome lambda_zero() {
  const auto adj = gs::normalize(gs::testing::random_graph(1000, 10, 2));
  std::mt19937_64 rng(2);
  Stopwatch clock;
  double err = 0.0;
  bool first_step = true;
  for (int trial = 0; trial < 100; ++trial) {
    const auto z = gs::testing::random_vector(1000, -5.0, 5.0, rng);
    const auto result = gs::graph_softmax(z, adj, with(0.0, gs::SolverConfig{}.tv_variant));
    err = std::max(err, linf(result.x.values(), gs::softmax(z).values()));
    first_step = first_step && result.converged && result.iterations == 1;
  }
  const double t = clock.seconds();
  return {err <= 1e-9 && first_step && t < 5.0,
          fmt::format("100 vectors N=1000, linf {:.3e} (<= 1e-9), converged at iteration 1: {}, "
                      "{:.2f} s (< 5 s)",
                      err, first_step ? "yes" : "no", t)};
}

Outcome gradient_check() {
  Stopwatch clock;
  std::mt19937_64 rng(3);
  const double h = 1e-6;
  double worst[2] = {0.0, 0.0};
  for (int trial = 0; trial < 50; ++trial) {
    const auto adj = gs::normalize(gs::testing::random_graph(50, 4, rng()));
    const auto z = gs::testing::random_vector(50, -2.0, 2.0, rng);
    const auto x = gs::testing::random_interior_point(50, 1e-3, rng);
    for (int v = 0; v < 2; ++v) {
      const auto cfg = with(1.0, v == 0 ? gs::TvVariant::kNorm : gs::TvVariant::kSquaredNorm);
      const auto g = gs::gradient(x, z, adj, cfg);
      std::vector<double> probe = x;
      std::vector<double> diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double fp = gs::objective(probe, z, adj, cfg);
        probe[i] = x[i] - h;
        const double fm = gs::objective(probe, z, adj, cfg);
        probe[i] = x[i];
        diff[i] = (fp - fm) / (2.0 * h) - g[i];
      }
      worst[v] = std::max(worst[v], norm2(diff) / norm2(g));
    }
  }
  const double t = clock.seconds();
  return {worst[0] < 1e-4 && worst[1] < 1e-4 && t < 5.0,
          fmt::format("50 points N=50, max relative error norm {:.3e} / squared_norm {:.3e} "
                      "(< 1e-4), {:.2f} s (< 5 s)",
                      worst[0], worst[1], t)};
}

struct LargeScale {
  gs::NormalizedAdjacency adj;
  std::vector<double> z;
};

const LargeScale& large_scale_problem() {
  static const LargeScale problem = [] {
    std::mt19937_64 rng(4);
    auto adj = gs::normalize(gs::testing::random_graph(50527, 10, 4));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> z(50527);
    for (double& e : z) e = normal(rng);
    return LargeScale{std::move(adj), std::move(z)};
  }();
  return problem;
}

std::string trace_summary(const gs::SolveResult& r) {
  std::string s;
  for (std::size_t t = 0; t < r.trace.size(); ++t) s += fmt::format("{}{:.2e}", t ? " " : "", r.trace[t]);
  return s;
}

Outcome large_scale() {
  const auto& p = large_scale_problem();
  gs::SolverConfig cfg;  // lambda 1, alpha 1e-4, 20 iterations, tol 1e-4
  Stopwatch clock;
  const auto result = gs::graph_softmax(p.z, p.adj, cfg);
  const double t = clock.seconds();
  const double gap = result.trace.back();
  return {result.converged && gap < 1e-4 && result.iterations <= 20 && t < 30.0,
          fmt::format("N=50527 nnz={} ({}), final gap {:.3e} (< 1e-4) after {} iterations "
                      "(<= 20), {:.2f} s (< 30 s)",
                      p.adj.matrix().nnz(), gs::to_string(cfg.tv_variant), gap, result.iterations,
                      t)};
}

void large_scale_norm_info() {
  const auto& p = large_scale_problem();
  const auto result = gs::graph_softmax(p.z, p.adj, with(1.0, gs::TvVariant::kNorm));
  std::printf("INFO large-scale norm variant: converged=%s iterations=%d gaps: %s\n",
              result.converged ? "yes" : "no", result.iterations, trace_summary(result).c_str());
}

Outcome example_graph() {
  const auto g = gs::ingest_corpus(gs::testing::example_corpus());
  const auto id = [&](const char* w) { return *g.vocab().find(w); };
  const struct {
    const char* src;
    const char* dst;
    std::uint64_t want;
  } edges[] = {{"the", "method", 3},   {"method", "suggested", 3}, {"i", "try", 2},
               {"try", "to", 2},       {"suggested", "in", 2},     {"suggested", "by", 1}};
  bool counts_ok = true;
  std::string got;
  for (const auto& e : edges) {
    const auto c = g.count(id(e.src), id(e.dst));
    counts_ok = counts_ok && c == e.want;
    got += fmt::format(" {}->{}={}", e.src, e.dst, c);
  }
  const auto adj = gs::normalize(g);
  std::size_t interior = 0, sinks = 0;
  bool rows_ok = true;
  for (gs::Index i = 0; i < g.size(); ++i) {
    const double s = adj.row_sum(i);
    if (g.out_degree(i) > 0) {
      rows_ok = rows_ok && s > 0.0 && s < 1.0;
      ++interior;
    } else {
      rows_ok = rows_ok && s == 0.0;
      ++sinks;
    }
  }
  return {counts_ok && rows_ok,
          fmt::format("N={},{}; row sums in (0,1) for {} rows with out-edges, exactly 0 for {} "
                      "sentence-final rows",
                      g.size(), got, interior, sinks)};
}

Outcome convexity() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> dim(3, 20);
  double min_eig = INFINITY;
  double min_fd_eig = INFINITY;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = dim(rng);
    const auto adj = gs::normalize(gs::testing::random_graph(n, 3, rng()));
    const auto x = gs::testing::random_interior_point(n, 0.01, rng);
    const auto z = gs::testing::random_vector(n, -2.0, 2.0, rng);
    for (auto variant : {gs::TvVariant::kNorm, gs::TvVariant::kSquaredNorm}) {
      const auto cfg = with(1.0, variant);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> analytic(
          gs::testing::analytic_hessian(x, adj, cfg), Eigen::EigenvaluesOnly);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> numeric(
          gs::testing::finite_difference_hessian(x, z, adj, cfg, 1e-6), Eigen::EigenvaluesOnly);
      min_eig = std::min(min_eig, analytic.eigenvalues().minCoeff());
      min_fd_eig = std::min(min_fd_eig, numeric.eigenvalues().minCoeff());
    }
  }
  return {min_eig > 0.0 && min_fd_eig > 0.0,
          fmt::format("20 instances N<=20, both variants, smallest Hessian eigenvalue {:.4g} "
                      "(closed form) / {:.4g} (differenced gradient), > 0",
                      min_eig, min_fd_eig)};
}

Outcome bleu_oracle() {
  const auto corpus = gs::testing::toy_review_corpus(200, 7);
  const auto report = gs::bleu(corpus, corpus, 5);
  double err = 0.0;
  for (const auto& [n, score] : report.bleu_n) err = std::max(err, std::abs(score - 1.0));

  const std::vector<gs::TokenSequence> cand{{"the", "the", "the", "the", "the", "the", "the"}};
  const std::vector<gs::TokenSequence> refs{{"the", "cat", "is", "on", "the", "mat"},
                                            {"there", "is", "a", "cat", "on", "the", "mat"}};
  const auto p1 = gs::modified_precision(cand, refs, 1);
  return {err <= 1e-12 && p1.clipped == 2 && p1.total == 7,
          fmt::format("identical corpora max |BLEU-n - 1| = {:.1e} (<= 1e-12); 'the' x7 unigram "
                      "precision {}/{} (2/7)",
                      err, p1.clipped, p1.total)};
}

Outcome lambda_sweep() {
  const auto corpus = gs::testing::toy_review_corpus(500, 8);
  gs::SweepConfig cfg;  // lambdas 0.25..2, 100 greedy prompts
  Stopwatch clock;
  const auto result = gs::run_lambda_sweep(corpus, cfg);
  const double t = clock.seconds();
  std::fputs(gs::format_sweep_table(result, cfg.max_n).c_str(), stdout);
  return {result.num_prompts == 100 && result.lambda_zero_matches_plain && t < 300.0,
          fmt::format("500 sentences, {} prompts x {} lambdas, lambda=0 matches plain "
                      "token-for-token: {}, {:.2f} s (< 300 s)",
                      result.num_prompts, cfg.lambdas.size(),
                      result.lambda_zero_matches_plain ? "yes" : "no", t)};
}

Outcome shift_invariance() {
  const auto adj = gs::normalize(gs::testing::random_graph(1000, 10, 9));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> shift(-100.0, 100.0);
  double err = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    auto z = gs::testing::random_vector(1000, -3.0, 3.0, rng);
    const auto base = gs::graph_softmax(z, adj, gs::SolverConfig{});
    const double c = shift(rng);
    for (double& e : z) e += c;
    err = std::max(err, linf(gs::graph_softmax(z, adj, gs::SolverConfig{}).x.values(),
                             base.x.values()));
  }
  return {err <= 1e-9, fmt::format("50 vectors N=1000, c in [-100, 100], linf {:.3e} (<= 1e-9)", err)};
}

}  // namespace

int main() {
  const struct {
    const char* name;
    std::function<Outcome()> run;
  } criteria[] = {
      {"simplex_projection", simplex_projection},
      {"lambda_zero_reduction", lambda_zero},
      {"gradient_correctness", gradient_check},
      {"large_scale_convergence", large_scale},
      {"example_graph", example_graph},
      {"convexity_witness", convexity},
      {"bleu_oracle", bleu_oracle},
      {"lambda_sweep", lambda_sweep},
      {"shift_invariance", shift_invariance},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, fmt::format("threw: {}", e.what())};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  large_scale_norm_info();
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
