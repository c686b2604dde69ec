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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "graphsoftmax/bleu.hpp"
#include "graphsoftmax/decode.hpp"
#include "graphsoftmax/graph.hpp"

namespace graphsoftmax {

struct SweepConfig {
  std::vector<double> lambdas{0.25, 0.5, 1.0, 1.5, 2.0};
  std::size_t num_prompts = 100;
  std::size_t prompt_len = 2;
  int order = 3;
  int max_n = 5;
  double epsilon = kDefaultEpsilon;
  DecodeConfig decode;  // softmax_kind and solver.lambda are set per row
};

struct SweepRow {
  std::string model;  // "softmax" or "graph_softmax"
  double lambda = 0.0;
  BleuReport bleu;
  double mean_length = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;            // plain softmax first, then one per lambda
  bool lambda_zero_matches_plain = false;  // token-for-token, every prompt
  std::size_t num_prompts = 0;
};

/// Converts token sentences to ids of `vocab`, dropping unknown tokens.
std::vector<std::vector<Index>> to_ids(std::span<const Sentence> sentences,
                                       const Vocabulary& vocab, std::size_t* dropped = nullptr);

std::vector<std::string> to_tokens(std::span<const Index> ids, const Vocabulary& vocab);

/// The desk-scale experiment: graph and n-gram LM from `corpus`, prompts are
/// the first prompt_len tokens of the first num_prompts sentences longer than
/// that, continuations are decoded with plain softmax, with graph softmax at
/// lambda = 0 (as a check) and at every lambda, and each decoded set
/// (prompt + continuation) is scored by BLEU against the whole corpus.
SweepResult run_lambda_sweep(std::span<const Sentence> corpus, const SweepConfig& cfg);

/// One CSV row per model: model,lambda,BLEU-2,...,BLEU-max_n,mean_length.
std::string format_sweep_table(const SweepResult& result, int max_n);

}  // namespace graphsoftmax
