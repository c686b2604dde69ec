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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "graphsoftmax/graph.hpp"
#include "graphsoftmax/ngram_lm.hpp"
#include "graphsoftmax/solver.hpp"

namespace graphsoftmax {

enum class DecodeMode { kGreedy, kSample };
enum class SoftmaxKind { kPlain, kGraph };

DecodeMode parse_decode_mode(std::string_view name);
SoftmaxKind parse_softmax_kind(std::string_view name);

struct DecodeConfig {
  int max_len = 150;
  DecodeMode mode = DecodeMode::kGreedy;
  std::uint64_t seed = 0;
  SoftmaxKind softmax_kind = SoftmaxKind::kPlain;
  SolverConfig solver;
};

/// Next-token loop: LM logits -> (graph) softmax -> argmax or a seeded
/// categorical draw, until the end marker or max_len new tokens.
///
/// The adjacency covers the vocabulary; the end marker is appended to it as
/// an isolated node. Both the model and the adjacency are only read, so one
/// Decoder may serve concurrent decode() calls.
class Decoder {
 public:
  /// Throws kDimension unless adj has lm.vocab_size() nodes.
  Decoder(const NGramLM& lm, const NormalizedAdjacency& adj);

  /// Returns the generated continuation (prompt and end marker excluded).
  /// Throws kDegeneratePrompt for an empty prompt, kInvalidArgument for an
  /// out-of-vocabulary id or max_len < 1.
  std::vector<Index> decode(std::span<const Index> prompt, const DecodeConfig& cfg) const;

  /// Next-token distribution after `context` under the configured softmax.
  SimplexPoint next_distribution(std::span<const Index> context, const DecodeConfig& cfg) const;

 private:
  const NGramLM& lm_;
  NormalizedAdjacency adj_;
};

inline std::vector<Index> decode(const NGramLM& lm, const NormalizedAdjacency& adj,
                                 std::span<const Index> prompt, const DecodeConfig& cfg) {
  return Decoder(lm, adj).decode(prompt, cfg);
}

/// Index drawn with probability x_i from one 53-bit uniform of `rng`.
template <typename Rng>
Index sample_categorical(std::span<const double> x, Rng& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double total = 0.0;
  for (double v : x) total += v;
  const double target = u * total;
  double cum = 0.0;
  Index last_positive = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0) continue;
    cum += x[i];
    last_positive = static_cast<Index>(i);
    if (target < cum) return last_positive;
  }
  return last_positive;
}

}  // namespace graphsoftmax
