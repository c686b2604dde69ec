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

#include "graphsoftmax/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"

namespace graphsoftmax {

namespace {

using NgramCounts = std::unordered_map<std::string, std::size_t>;

// Tokens joined with the unit separator, which tokenization never produces.
NgramCounts count_ngrams(const TokenSequence& tokens, int n) {
  NgramCounts counts;
  const auto len = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t j = 1; j < len; ++j) {
      key += '\x1f';
      key += tokens[i + j];
    }
    counts[key] += 1;
  }
  return counts;
}

NgramCounts max_reference_counts(std::span<const TokenSequence> references, int n) {
  NgramCounts best;
  for (const auto& ref : references) {
    for (const auto& [gram, c] : count_ngrams(ref, n)) {
      auto& slot = best[gram];
      slot = std::max(slot, c);
    }
  }
  return best;
}

void require_inputs(std::span<const TokenSequence> candidates,
                    std::span<const TokenSequence> references) {
  if (candidates.empty()) throw Error(ErrorKind::kEmptyInput, "no candidate sentences");
  if (references.empty()) throw Error(ErrorKind::kEmptyInput, "no reference sentences");
}

ClippedCount clip(std::span<const TokenSequence> candidates, const NgramCounts& ref_max, int n) {
  ClippedCount out;
  for (const auto& cand : candidates) {
    for (const auto& [gram, c] : count_ngrams(cand, n)) {
      auto it = ref_max.find(gram);
      out.clipped += std::min(c, it == ref_max.end() ? std::size_t{0} : it->second);
      out.total += c;
    }
  }
  return out;
}

}  // namespace

ClippedCount modified_precision(std::span<const TokenSequence> candidates,
                                std::span<const TokenSequence> references, int n) {
  require_inputs(candidates, references);
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "n-gram order must be >= 1");
  return clip(candidates, max_reference_counts(references, n), n);
}

BleuReport bleu(std::span<const TokenSequence> candidates,
                std::span<const TokenSequence> references, int max_n) {
  require_inputs(candidates, references);
  if (max_n < 2 || max_n > 5) {
    throw Error(ErrorKind::kInvalidArgument, fmt::format("max_n = {} outside [2, 5]", max_n));
  }

  BleuReport report;
  std::vector<std::size_t> ref_lengths;
  ref_lengths.reserve(references.size());
  for (const auto& ref : references) ref_lengths.push_back(ref.size());
  std::sort(ref_lengths.begin(), ref_lengths.end());

  for (const auto& cand : candidates) {
    const std::size_t c = cand.size();
    auto it = std::lower_bound(ref_lengths.begin(), ref_lengths.end(), c);
    std::size_t closest = it == ref_lengths.end() ? ref_lengths.back() : *it;
    if (it != ref_lengths.begin()) {
      const std::size_t below = *std::prev(it);
      if (c - below <= closest - c || it == ref_lengths.end()) closest = below;
    }
    report.candidate_length += c;
    report.reference_length += closest;
  }

  if (report.candidate_length == 0) {
    report.brevity_penalty = 0.0;
  } else if (report.candidate_length < report.reference_length) {
    report.brevity_penalty =
        std::exp(1.0 - static_cast<double>(report.reference_length) /
                           static_cast<double>(report.candidate_length));
  }

  double log_sum = 0.0;
  bool zero = false;
  for (int n = 1; n <= max_n; ++n) {
    const ClippedCount counts = clip(candidates, max_reference_counts(references, n), n);
    const double p = counts.total == 0 ? 0.0
                                       : static_cast<double>(counts.clipped) /
                                             static_cast<double>(counts.total);
    report.precisions.push_back(p);
    if (p == 0.0) zero = true;
    if (!zero) log_sum += std::log(p);
    if (n >= 2) {
      report.bleu_n[n] = zero ? 0.0 : report.brevity_penalty * std::exp(log_sum / n);
    }
  }
  return report;
}

}  // namespace graphsoftmax
