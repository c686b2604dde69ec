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
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "graphsoftmax/csr_matrix.hpp"

namespace graphsoftmax {

/// Count-based backoff language model over token ids [0, vocab_size).
///
/// The output space has vocab_size + 1 entries: id vocab_size is the
/// end-of-sentence marker. A begin-of-sentence marker pads contexts but is
/// never predicted. Scores use stupid backoff down to an add-k unigram floor,
/// so every logit is finite.
class NGramLM {
 public:
  static constexpr double kAddK = 0.01;
  static constexpr double kBackoff = 0.4;

  /// An untrained model: every context is unseen and all logits are equal.
  NGramLM(std::size_t vocab_size, int order);

  int order() const noexcept { return order_; }
  std::size_t vocab_size() const noexcept { return vocab_size_; }
  std::size_t output_size() const noexcept { return vocab_size_ + 1; }
  Index eos() const noexcept { return static_cast<Index>(vocab_size_); }
  Index bos() const noexcept { return static_cast<Index>(vocab_size_ + 1); }

  /// Adds the k-gram counts (k <= order) of one sentence, padded with
  /// order-1 begin markers and one end marker. Empty sentences are ignored.
  void add_sentence(std::span<const Index> sentence);

  /// Number of times `next` followed `context` (context may hold bos()).
  std::uint64_t count(std::span<const Index> context, Index next) const;

  /// z_i = log of the backoff score of output i after the longest suffix of
  /// `context` seen in training. Length output_size().
  /// Throws kInvalidArgument for ids outside the vocabulary.
  std::vector<double> logits(std::span<const Index> context) const;

 private:
  struct ContextCounts {
    std::uint64_t total = 0;
    std::unordered_map<Index, std::uint64_t> next;
  };

  const ContextCounts* find(std::span<const Index> context) const;

  std::size_t vocab_size_;
  int order_;
  std::map<std::vector<Index>, ContextCounts> table_;
};

/// Throws kEmptyInput when no sentence has a token, kInvalidArgument when
/// order < 1 or an id is out of range.
NGramLM train_ngram(std::span<const std::vector<Index>> sentences, std::size_t vocab_size,
                    int order = 3);

inline std::vector<double> logits_for(const NGramLM& lm, std::span<const Index> context) {
  return lm.logits(context);
}

/// exp of the mean negative log-probability per predicted token (each
/// sentence token plus the end marker), using the softmax of the logits.
/// Throws kEmptyInput for no tokens.
double perplexity(const NGramLM& lm, std::span<const std::vector<Index>> sentences);

}  // namespace graphsoftmax
