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

#include "graphsoftmax/evaluation.hpp"

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"
#include "graphsoftmax/ngram_lm.hpp"

namespace graphsoftmax {

std::vector<std::vector<Index>> to_ids(std::span<const Sentence> sentences,
                                       const Vocabulary& vocab, std::size_t* dropped) {
  std::vector<std::vector<Index>> out;
  out.reserve(sentences.size());
  std::size_t missing = 0;
  for (const auto& sentence : sentences) {
    auto& ids = out.emplace_back();
    for (const auto& token : sentence) {
      if (auto id = vocab.find(token)) {
        ids.push_back(*id);
      } else {
        ++missing;
      }
    }
  }
  if (dropped) *dropped = missing;
  return out;
}

std::vector<std::string> to_tokens(std::span<const Index> ids, const Vocabulary& vocab) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (Index id : ids) out.push_back(vocab.word(id));
  return out;
}

SweepResult run_lambda_sweep(std::span<const Sentence> corpus, const SweepConfig& cfg) {
  const ConcurrenceGraph graph = ingest_corpus(corpus);
  const NormalizedAdjacency adj = normalize(graph, cfg.epsilon);
  const auto ids = to_ids(corpus, graph.vocab());
  const NGramLM lm = train_ngram(ids, graph.size(), cfg.order);
  const Decoder decoder(lm, adj);

  std::vector<std::span<const Index>> prompts;
  for (const auto& sentence : ids) {
    if (prompts.size() == cfg.num_prompts) break;
    if (sentence.size() > cfg.prompt_len) prompts.emplace_back(sentence.data(), cfg.prompt_len);
  }
  if (prompts.empty()) throw Error(ErrorKind::kEmptyInput, "corpus has no usable prompts");

  std::vector<TokenSequence> references(corpus.begin(), corpus.end());

  const auto run = [&](SoftmaxKind kind, double lambda, std::vector<std::vector<Index>>* raw) {
    DecodeConfig dc = cfg.decode;
    dc.softmax_kind = kind;
    dc.solver.lambda = lambda;
    std::vector<TokenSequence> candidates;
    std::size_t total_len = 0;
    for (auto prompt : prompts) {
      std::vector<Index> full(prompt.begin(), prompt.end());
      const auto continuation = decoder.decode(prompt, dc);
      full.insert(full.end(), continuation.begin(), continuation.end());
      total_len += full.size();
      candidates.push_back(to_tokens(full, graph.vocab()));
      if (raw) raw->push_back(std::move(full));
    }
    SweepRow row;
    row.model = kind == SoftmaxKind::kPlain ? "softmax" : "graph_softmax";
    row.lambda = lambda;
    row.bleu = bleu(candidates, references, cfg.max_n);
    row.mean_length = static_cast<double>(total_len) / static_cast<double>(prompts.size());
    return row;
  };

  SweepResult result;
  result.num_prompts = prompts.size();
  std::vector<std::vector<Index>> plain_out;
  std::vector<std::vector<Index>> zero_out;
  result.rows.push_back(run(SoftmaxKind::kPlain, 0.0, &plain_out));
  run(SoftmaxKind::kGraph, 0.0, &zero_out);
  result.lambda_zero_matches_plain = plain_out == zero_out;
  for (double lambda : cfg.lambdas) result.rows.push_back(run(SoftmaxKind::kGraph, lambda, nullptr));
  return result;
}

std::string format_sweep_table(const SweepResult& result, int max_n) {
  std::string out = "model,lambda";
  for (int n = 2; n <= max_n; ++n) out += fmt::format(",BLEU-{}", n);
  out += ",mean_length\n";
  for (const auto& row : result.rows) {
    out += row.model;
    out += row.model == "softmax" ? std::string(",-") : fmt::format(",{:.2f}", row.lambda);
    for (int n = 2; n <= max_n; ++n) out += fmt::format(",{:.6f}", row.bleu.bleu_n.at(n));
    out += fmt::format(",{:.2f}\n", row.mean_length);
  }
  return out;
}

}  // namespace graphsoftmax
