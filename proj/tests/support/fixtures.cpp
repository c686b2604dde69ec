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

#include "fixtures.hpp"

#include <algorithm>
#include <string>

namespace graphsoftmax::testing {

std::vector<Sentence> example_corpus() {
  const char* lines[] = {
      "I try to apply the method suggested in his paper.",
      "I try to learn the method suggested by him.",
      "I will use the method suggested in this book.",
  };
  std::vector<Sentence> out;
  for (const char* line : lines) out.push_back(tokenize(line, TokenizerMode::kWhitespaceLower));
  return out;
}

ConcurrenceGraph random_graph(std::size_t n, std::size_t edges_per_row, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  std::uniform_int_distribution<std::uint64_t> weight(1, 20);

  std::vector<std::string> words;
  words.reserve(n);
  for (std::size_t i = 0; i < n; ++i) words.push_back("w" + std::to_string(i));

  CsrMatrix<std::uint64_t> counts;
  counts.dim = n;
  counts.row_ptr.assign(n + 1, 0);
  std::vector<Index> cols;
  for (std::size_t i = 0; i < n; ++i) {
    cols.clear();
    for (std::size_t e = 0; e < edges_per_row; ++e) cols.push_back(pick(rng));
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (Index c : cols) {
      counts.col_idx.push_back(c);
      counts.values.push_back(weight(rng));
    }
    counts.row_ptr[i + 1] = counts.col_idx.size();
  }
  return ConcurrenceGraph(Vocabulary(std::move(words)), std::move(counts));
}

std::vector<Sentence> toy_review_corpus(std::size_t sentences, std::uint64_t seed) {
  const std::vector<std::vector<std::string>> subjects = {
      {"the", "food"}, {"the", "service"}, {"this", "place"}, {"the", "staff"},
      {"the", "pizza"}, {"my", "order"},   {"the", "book"},   {"this", "product"}};
  const std::vector<std::string> verbs = {"was", "is", "seemed", "looked"};
  const std::vector<std::string> adverbs = {"really", "very", "quite", "so", "not"};
  const std::vector<std::string> adjectives = {"good", "great", "bad", "slow", "friendly",
                                               "cheap", "fresh", "terrible", "amazing"};
  const std::vector<std::vector<std::string>> tails = {
      {"and", "i", "will", "come", "back"},
      {"and", "the", "price", "was", "fair"},
      {"but", "the", "wait", "was", "long"},
      {"i", "would", "recommend", "it"},
      {"do", "not", "buy", "it"},
      {}};

  std::mt19937_64 rng(seed);
  const auto pick = [&](std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  };
  std::vector<Sentence> out;
  out.reserve(sentences);
  for (std::size_t s = 0; s < sentences; ++s) {
    Sentence sentence = subjects[pick(subjects.size())];
    sentence.push_back(verbs[pick(verbs.size())]);
    if (pick(2) == 0) sentence.push_back(adverbs[pick(adverbs.size())]);
    sentence.push_back(adjectives[pick(adjectives.size())]);
    const auto& tail = tails[pick(tails.size())];
    sentence.insert(sentence.end(), tail.begin(), tail.end());
    out.push_back(std::move(sentence));
  }
  return out;
}

std::vector<double> random_vector(std::size_t n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& e : v) e = dist(rng);
  return v;
}

std::vector<double> random_interior_point(std::size_t n, double floor, std::mt19937_64& rng) {
  std::vector<double> x = random_vector(n, 0.0, 1.0, rng);
  double sum = 0.0;
  for (double e : x) sum += e;
  const double scale = (1.0 - floor * static_cast<double>(n)) / sum;
  for (double& e : x) e = floor + e * scale;
  return x;
}

}  // namespace graphsoftmax::testing
