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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphsoftmax/csr_matrix.hpp"
#include "graphsoftmax/vocabulary.hpp"

namespace graphsoftmax {

using Sentence = std::vector<std::string>;

enum class TokenizerMode { kWhitespaceLower, kPretokenizedIds };

TokenizerMode parse_tokenizer_mode(std::string_view name);

/// Splits one line of text into tokens.
///
/// kWhitespaceLower splits on ASCII and Unicode whitespace, lowercases ASCII
/// letters and strips leading/trailing ASCII punctuation from every token;
/// tokens that are pure punctuation vanish. kPretokenizedIds keeps
/// whitespace-separated integer ids verbatim and rejects anything else.
std::vector<std::string> tokenize(std::string_view text, TokenizerMode mode);

/// Directed word-concurrence graph: counts(i, j) is the number of times the
/// 2-gram (word i, word j) occurs inside a sentence.
class ConcurrenceGraph {
 public:
  ConcurrenceGraph() = default;

  /// Validates that the count matrix matches the vocabulary, is sorted and
  /// holds strictly positive entries. Throws kFormat otherwise.
  ConcurrenceGraph(Vocabulary vocab, CsrMatrix<std::uint64_t> counts);

  const Vocabulary& vocab() const noexcept { return vocab_; }
  const CsrMatrix<std::uint64_t>& counts() const noexcept { return counts_; }
  std::size_t size() const noexcept { return vocab_.size(); }
  std::size_t num_edges() const noexcept { return counts_.nnz(); }

  std::uint64_t count(Index src, Index dst) const;
  std::uint64_t out_degree(Index src) const;
  std::uint64_t total_count() const;

  bool operator==(const ConcurrenceGraph&) const = default;

 private:
  Vocabulary vocab_;
  CsrMatrix<std::uint64_t> counts_;
};

/// Counts every adjacent token pair of every sentence, on top of `existing`
/// when given. Empty sentences are skipped. Tokens not yet in the vocabulary
/// receive new ids in byte-lexicographic order, which makes the result
/// independent of sentence order.
///
/// Throws kEmptyInput for a corpus without sentences.
ConcurrenceGraph ingest_corpus(std::span<const Sentence> sentences,
                               const ConcurrenceGraph* existing = nullptr);

inline constexpr double kDefaultEpsilon = 1e-6;

/// Row-normalized adjacency D^-1 A with D_ii = sum_j A_ij + epsilon.
/// Immutable once built; safe to share between concurrent solves.
class NormalizedAdjacency {
 public:
  NormalizedAdjacency() = default;

  /// Throws kInvalidArgument unless epsilon > 0, entries lie in [0, 1) and
  /// every row sums to less than 1.
  NormalizedAdjacency(CsrMatrix<double> matrix, double epsilon);

  const CsrMatrix<double>& matrix() const noexcept { return matrix_; }
  double epsilon() const noexcept { return epsilon_; }
  std::size_t size() const noexcept { return matrix_.dim; }

  double row_sum(Index row) const;

  /// Same matrix with `extra` isolated nodes appended.
  NormalizedAdjacency padded(std::size_t extra) const;

 private:
  CsrMatrix<double> matrix_;
  double epsilon_ = kDefaultEpsilon;
};

/// Throws kInvalidArgument unless epsilon > 0.
NormalizedAdjacency normalize(const ConcurrenceGraph& graph, double epsilon = kDefaultEpsilon);

/// Power-iteration estimate of the spectral radius of a nonnegative matrix:
/// min over k <= iters of ||A^k 1||_inf^(1/k). For nonnegative A this is an
/// upper bound that converges to the spectral radius and never exceeds the
/// largest row sum.
double estimate_spectral_radius(const NormalizedAdjacency& adj, int iters);

}  // namespace graphsoftmax
