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

#include "graphsoftmax/ngram_lm.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"
#include "graphsoftmax/solver.hpp"

namespace graphsoftmax {

NGramLM::NGramLM(std::size_t vocab_size, int order) : vocab_size_(vocab_size), order_(order) {
  if (order < 1) throw Error(ErrorKind::kInvalidArgument, "n-gram order must be >= 1");
}

void NGramLM::add_sentence(std::span<const Index> sentence) {
  if (sentence.empty()) return;
  const auto pad = static_cast<std::size_t>(order_ - 1);
  std::vector<Index> padded(pad, bos());
  for (Index id : sentence) {
    if (id >= vocab_size_) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("token id {} outside vocabulary of size {}", id, vocab_size_));
    }
    padded.push_back(id);
  }
  padded.push_back(eos());

  for (std::size_t p = pad; p < padded.size(); ++p) {
    for (std::size_t k = 0; k <= pad; ++k) {
      std::vector<Index> context(padded.begin() + static_cast<std::ptrdiff_t>(p - k),
                                 padded.begin() + static_cast<std::ptrdiff_t>(p));
      auto& entry = table_[std::move(context)];
      entry.total += 1;
      entry.next[padded[p]] += 1;
    }
  }
}

const NGramLM::ContextCounts* NGramLM::find(std::span<const Index> context) const {
  auto it = table_.find(std::vector<Index>(context.begin(), context.end()));
  return it == table_.end() ? nullptr : &it->second;
}

std::uint64_t NGramLM::count(std::span<const Index> context, Index next) const {
  const auto* entry = find(context);
  if (!entry) return 0;
  auto it = entry->next.find(next);
  return it == entry->next.end() ? 0 : it->second;
}

std::vector<double> NGramLM::logits(std::span<const Index> context) const {
  for (Index id : context) {
    if (id >= vocab_size_) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("out-of-vocabulary context id {}", id));
    }
  }
  const std::size_t n_out = output_size();
  const auto pad = static_cast<std::size_t>(order_ - 1);
  std::vector<Index> history(pad, bos());
  history.insert(history.end(), context.begin(), context.end());
  const std::span<const Index> tail(history.data() + history.size() - pad, pad);

  // Unigram floor with add-k smoothing over every output.
  std::vector<double> score(n_out);
  const ContextCounts* unigram = find({});
  const double total = unigram ? static_cast<double>(unigram->total) : 0.0;
  const double denom = total + kAddK * static_cast<double>(n_out);
  for (std::size_t w = 0; w < n_out; ++w) score[w] = kAddK / denom;
  if (unigram) {
    for (const auto& [w, c] : unigram->next) score[w] = (static_cast<double>(c) + kAddK) / denom;
  }

  // Walk from short to long contexts; stop at the first unseen one, since
  // every longer suffix is unseen as well.
  for (std::size_t len = 1; len <= pad; ++len) {
    const ContextCounts* entry = find(tail.subspan(pad - len));
    if (!entry) break;
    const double ctx_total = static_cast<double>(entry->total);
    for (double& s : score) s *= kBackoff;
    for (const auto& [w, c] : entry->next) score[w] = static_cast<double>(c) / ctx_total;
  }

  std::vector<double> z(n_out);
  for (std::size_t w = 0; w < n_out; ++w) z[w] = std::log(score[w]);
  return z;
}

NGramLM train_ngram(std::span<const std::vector<Index>> sentences, std::size_t vocab_size,
                    int order) {
  NGramLM lm(vocab_size, order);
  bool any = false;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    lm.add_sentence(sentence);
    any = true;
  }
  if (!any) throw Error(ErrorKind::kEmptyInput, "empty corpus");
  return lm;
}

double perplexity(const NGramLM& lm, std::span<const std::vector<Index>> sentences) {
  double nll = 0.0;
  std::size_t tokens = 0;
  std::vector<Index> history;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    history.clear();
    for (std::size_t t = 0; t <= sentence.size(); ++t) {
      const Index target = t < sentence.size() ? sentence[t] : lm.eos();
      if (t < sentence.size() && target >= lm.vocab_size()) {
        throw Error(ErrorKind::kInvalidArgument, fmt::format("token id {} out of range", target));
      }
      const auto z = lm.logits(history);
      nll -= z[target] - logsumexp(z);
      ++tokens;
      if (t < sentence.size()) history.push_back(sentence[t]);
    }
  }
  if (tokens == 0) throw Error(ErrorKind::kEmptyInput, "no tokens to evaluate");
  return std::exp(nll / static_cast<double>(tokens));
}

}  // namespace graphsoftmax
