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
#include <map>
#include <span>
#include <string>
#include <vector>

namespace graphsoftmax {

using TokenSequence = std::vector<std::string>;

struct BleuReport {
  std::map<int, double> bleu_n;    // n -> BLEU-n, n = 2..max_n
  std::vector<double> precisions;  // modified precision p_1..p_max_n
  double brevity_penalty = 1.0;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
};

struct ClippedCount {
  std::size_t clipped = 0;
  std::size_t total = 0;
};

// Every candidate is scored against the whole reference set: an n-gram is
// clipped at its largest count in any single reference, and the brevity
// penalty uses, per candidate, the closest reference length (shorter wins a
// tie). Counts are pooled over the corpus before dividing.

/// Corpus-level clipped n-gram counts for one order n.
ClippedCount modified_precision(std::span<const TokenSequence> candidates,
                                std::span<const TokenSequence> references, int n);

/// Corpus BLEU-n = BP * exp(mean_{k<=n} log p_k) for n = 2..max_n, with
/// BP = min(1, exp(1 - r / c)). An order with no candidate n-grams, or a
/// zero precision, yields 0.
///
/// Throws kEmptyInput on empty inputs and kInvalidArgument unless
/// 2 <= max_n <= 5.
BleuReport bleu(std::span<const TokenSequence> candidates,
                std::span<const TokenSequence> references, int max_n = 5);

}  // namespace graphsoftmax
