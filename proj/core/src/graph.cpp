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

#include "graphsoftmax/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>
#include <utility>

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"

namespace graphsoftmax {

namespace {

// Length in bytes of the whitespace code point starting at text[pos], or 0.
std::size_t whitespace_length(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return pos + i < text.size() ? static_cast<unsigned char>(text[pos + i]) : 0u;
  };
  const unsigned char c = byte(0);
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') return 1;
  // U+0085, U+00A0
  if (c == 0xC2 && (byte(1) == 0x85 || byte(1) == 0xA0)) return 2;
  // U+1680
  if (c == 0xE1 && byte(1) == 0x9A && byte(2) == 0x80) return 3;
  if (c == 0xE2) {
    // U+2000..U+200A, U+2028, U+2029, U+202F
    if (byte(1) == 0x80 && ((byte(2) >= 0x80 && byte(2) <= 0x8A) || byte(2) == 0xA8 ||
                            byte(2) == 0xA9 || byte(2) == 0xAF)) {
      return 3;
    }
    // U+205F
    if (byte(1) == 0x81 && byte(2) == 0x9F) return 3;
  }
  // U+3000
  if (c == 0xE3 && byte(1) == 0x80 && byte(2) == 0x80) return 3;
  return 0;
}

bool is_ascii_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x21 && u <= 0x2F) || (u >= 0x3A && u <= 0x40) || (u >= 0x5B && u <= 0x60) ||
         (u >= 0x7B && u <= 0x7E);
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> pieces;
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;
  while (pos < text.size()) {
    const std::size_t ws = whitespace_length(text, pos);
    if (ws > 0) {
      if (start != std::string_view::npos) {
        pieces.push_back(text.substr(start, pos - start));
        start = std::string_view::npos;
      }
      pos += ws;
    } else {
      if (start == std::string_view::npos) start = pos;
      ++pos;
    }
  }
  if (start != std::string_view::npos) pieces.push_back(text.substr(start));
  return pieces;
}

std::uint64_t pair_key(Index src, Index dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

}  // namespace

TokenizerMode parse_tokenizer_mode(std::string_view name) {
  if (name == "whitespace_lower") return TokenizerMode::kWhitespaceLower;
  if (name == "pretokenized_ids") return TokenizerMode::kPretokenizedIds;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown tokenizer '{}'", name));
}

std::vector<std::string> tokenize(std::string_view text, TokenizerMode mode) {
  std::vector<std::string> tokens;
  for (std::string_view piece : split_whitespace(text)) {
    if (mode == TokenizerMode::kPretokenizedIds) {
      long long id = 0;
      const char* first = piece.data();
      const char* last = first + piece.size();
      auto [ptr, ec] = std::from_chars(first, last, id);
      if (ec != std::errc() || ptr != last) {
        throw Error(ErrorKind::kFormat, fmt::format("malformed token id '{}'", piece));
      }
      tokens.emplace_back(piece);
      continue;
    }
    std::size_t begin = 0;
    std::size_t end = piece.size();
    while (begin < end && is_ascii_punct(piece[begin])) ++begin;
    while (end > begin && is_ascii_punct(piece[end - 1])) --end;
    if (begin == end) continue;
    std::string token(piece.substr(begin, end - begin));
    for (char& c : token) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

ConcurrenceGraph::ConcurrenceGraph(Vocabulary vocab, CsrMatrix<std::uint64_t> counts)
    : vocab_(std::move(vocab)), counts_(std::move(counts)) {
  const std::size_t n = vocab_.size();
  if (counts_.dim != n || counts_.row_ptr.size() != n + 1 || counts_.row_ptr.front() != 0 ||
      counts_.row_ptr.back() != counts_.values.size() ||
      counts_.col_idx.size() != counts_.values.size()) {
    throw Error(ErrorKind::kFormat, "count matrix does not match vocabulary size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (counts_.row_ptr[i] > counts_.row_ptr[i + 1]) {
      throw Error(ErrorKind::kFormat, "row pointers are not monotone");
    }
    for (std::size_t k = counts_.row_ptr[i]; k < counts_.row_ptr[i + 1]; ++k) {
      if (counts_.col_idx[k] >= n) {
        throw Error(ErrorKind::kFormat, fmt::format("edge {}->{} out of range", i, counts_.col_idx[k]));
      }
      if (k > counts_.row_ptr[i] && counts_.col_idx[k] <= counts_.col_idx[k - 1]) {
        throw Error(ErrorKind::kFormat, fmt::format("edges of row {} not strictly ascending", i));
      }
      if (counts_.values[k] == 0) {
        throw Error(ErrorKind::kFormat, fmt::format("zero count on edge {}->{}", i, counts_.col_idx[k]));
      }
    }
  }
}

std::uint64_t ConcurrenceGraph::count(Index src, Index dst) const {
  if (src >= size()) return 0;
  auto cols = counts_.row_cols(src);
  auto it = std::lower_bound(cols.begin(), cols.end(), dst);
  if (it == cols.end() || *it != dst) return 0;
  return counts_.row_values(src)[static_cast<std::size_t>(it - cols.begin())];
}

std::uint64_t ConcurrenceGraph::out_degree(Index src) const {
  std::uint64_t total = 0;
  for (auto c : counts_.row_values(src)) total += c;
  return total;
}

std::uint64_t ConcurrenceGraph::total_count() const {
  std::uint64_t total = 0;
  for (auto c : counts_.values) total += c;
  return total;
}

ConcurrenceGraph ingest_corpus(std::span<const Sentence> sentences,
                               const ConcurrenceGraph* existing) {
  if (sentences.empty()) throw Error(ErrorKind::kEmptyInput, "empty corpus");

  Vocabulary vocab = existing ? existing->vocab() : Vocabulary{};
  std::set<std::string_view> unseen;
  for (const auto& sentence : sentences) {
    for (const auto& token : sentence) {
      if (token.empty()) throw Error(ErrorKind::kInvalidArgument, "empty token in corpus");
      if (!vocab.find(token)) unseen.insert(token);
    }
  }
  for (std::string_view token : unseen) vocab.add(token);

  std::unordered_map<std::uint64_t, std::uint64_t> tally;
  if (existing) {
    const auto& c = existing->counts();
    for (std::size_t i = 0; i < c.dim; ++i) {
      for (std::size_t k = c.row_ptr[i]; k < c.row_ptr[i + 1]; ++k) {
        tally[pair_key(static_cast<Index>(i), c.col_idx[k])] += c.values[k];
      }
    }
  }
  for (const auto& sentence : sentences) {
    for (std::size_t t = 0; t + 1 < sentence.size(); ++t) {
      tally[pair_key(*vocab.find(sentence[t]), *vocab.find(sentence[t + 1]))] += 1;
    }
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges(tally.begin(), tally.end());
  std::sort(edges.begin(), edges.end());

  CsrMatrix<std::uint64_t> counts;
  counts.dim = vocab.size();
  counts.row_ptr.assign(counts.dim + 1, 0);
  counts.col_idx.reserve(edges.size());
  counts.values.reserve(edges.size());
  for (const auto& [key, count] : edges) {
    counts.row_ptr[(key >> 32) + 1] += 1;
    counts.col_idx.push_back(static_cast<Index>(key & 0xFFFFFFFFu));
    counts.values.push_back(count);
  }
  for (std::size_t i = 0; i < counts.dim; ++i) counts.row_ptr[i + 1] += counts.row_ptr[i];

  return ConcurrenceGraph(std::move(vocab), std::move(counts));
}

NormalizedAdjacency::NormalizedAdjacency(CsrMatrix<double> matrix, double epsilon)
    : matrix_(std::move(matrix)), epsilon_(epsilon) {
  if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_)) {
    throw Error(ErrorKind::kInvalidArgument, "epsilon must be a positive finite number");
  }
  if (matrix_.row_ptr.size() != matrix_.dim + 1 || matrix_.row_ptr.back() != matrix_.nnz() ||
      matrix_.col_idx.size() != matrix_.nnz()) {
    throw Error(ErrorKind::kInvalidArgument, "malformed sparse matrix");
  }
  for (std::size_t i = 0; i < matrix_.dim; ++i) {
    double sum = 0.0;
    for (std::size_t k = matrix_.row_ptr[i]; k < matrix_.row_ptr[i + 1]; ++k) {
      const double v = matrix_.values[k];
      if (!(v >= 0.0 && v < 1.0) || matrix_.col_idx[k] >= matrix_.dim) {
        throw Error(ErrorKind::kInvalidArgument,
                    fmt::format("normalized entry ({}, {}) = {} outside [0, 1)", i,
                                matrix_.col_idx[k], v));
      }
      sum += v;
    }
    if (!(sum < 1.0)) {
      throw Error(ErrorKind::kInvalidArgument, fmt::format("row {} sums to {} >= 1", i, sum));
    }
  }
}

double NormalizedAdjacency::row_sum(Index row) const {
  double sum = 0.0;
  for (double v : matrix_.row_values(row)) sum += v;
  return sum;
}

NormalizedAdjacency NormalizedAdjacency::padded(std::size_t extra) const {
  NormalizedAdjacency out = *this;
  out.matrix_.dim += extra;
  out.matrix_.row_ptr.resize(out.matrix_.dim + 1, out.matrix_.nnz());
  return out;
}

NormalizedAdjacency normalize(const ConcurrenceGraph& graph, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("epsilon must be positive, got {}", epsilon));
  }
  const auto& counts = graph.counts();
  CsrMatrix<double> m;
  m.dim = counts.dim;
  m.row_ptr = counts.row_ptr;
  m.col_idx = counts.col_idx;
  m.values.resize(counts.nnz());
  for (std::size_t i = 0; i < counts.dim; ++i) {
    const double denom = static_cast<double>(graph.out_degree(static_cast<Index>(i))) + epsilon;
    for (std::size_t k = counts.row_ptr[i]; k < counts.row_ptr[i + 1]; ++k) {
      m.values[k] = static_cast<double>(counts.values[k]) / denom;
    }
  }
  return NormalizedAdjacency(std::move(m), epsilon);
}

double estimate_spectral_radius(const NormalizedAdjacency& adj, int iters) {
  if (iters < 1) throw Error(ErrorKind::kInvalidArgument, "iters must be >= 1");
  const std::size_t n = adj.size();
  if (n == 0) return 0.0;

  // v_k = A^k 1 / scale_k, with log_scale = log of the accumulated scale.
  std::vector<double> v(n, 1.0);
  std::vector<double> next(n);
  double log_scale = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= iters; ++k) {
    spmv(adj.matrix(), v, next);
    const double norm = *std::max_element(next.begin(), next.end());
    if (norm <= 0.0) return 0.0;
    log_scale += std::log(norm);
    best = std::min(best, std::exp(log_scale / k));
    for (std::size_t i = 0; i < n; ++i) v[i] = next[i] / norm;
  }
  return best;
}

}  // namespace graphsoftmax
