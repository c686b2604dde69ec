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

#include "graphsoftmax/decode.hpp"

#include <random>

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"

namespace graphsoftmax {

DecodeMode parse_decode_mode(std::string_view name) {
  if (name == "greedy") return DecodeMode::kGreedy;
  if (name == "sample") return DecodeMode::kSample;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown decode mode '{}'", name));
}

SoftmaxKind parse_softmax_kind(std::string_view name) {
  if (name == "plain") return SoftmaxKind::kPlain;
  if (name == "graph") return SoftmaxKind::kGraph;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown softmax kind '{}'", name));
}

Decoder::Decoder(const NGramLM& lm, const NormalizedAdjacency& adj) : lm_(lm) {
  if (adj.size() != lm.vocab_size()) {
    throw Error(ErrorKind::kDimension,
                fmt::format("graph has {} nodes but the language model vocabulary has {}",
                            adj.size(), lm.vocab_size()));
  }
  adj_ = adj.padded(1);
}

SimplexPoint Decoder::next_distribution(std::span<const Index> context,
                                        const DecodeConfig& cfg) const {
  const std::vector<double> z = lm_.logits(context);
  if (cfg.softmax_kind == SoftmaxKind::kPlain) return softmax(z);
  return graph_softmax(z, adj_, cfg.solver).x;
}

std::vector<Index> Decoder::decode(std::span<const Index> prompt, const DecodeConfig& cfg) const {
  if (prompt.empty()) throw Error(ErrorKind::kDegeneratePrompt, "empty prompt");
  if (cfg.max_len < 1) throw Error(ErrorKind::kInvalidArgument, "max_len must be >= 1");
  if (cfg.softmax_kind == SoftmaxKind::kGraph) cfg.solver.validate();
  for (Index id : prompt) {
    if (id >= lm_.vocab_size()) {
      throw Error(ErrorKind::kInvalidArgument, fmt::format("prompt id {} out of vocabulary", id));
    }
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<Index> context(prompt.begin(), prompt.end());
  std::vector<Index> generated;
  for (int step = 0; step < cfg.max_len; ++step) {
    const SimplexPoint x = next_distribution(context, cfg);
    const Index next = cfg.mode == DecodeMode::kGreedy ? top_k_indices(x.values(), 1).front()
                                                       : sample_categorical(x.values(), rng);
    if (next == lm_.eos()) break;
    generated.push_back(next);
    context.push_back(next);
  }
  return generated;
}

}  // namespace graphsoftmax
