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
#include <random>

#include "graphsoftmax/error.hpp"
#include "gtest/gtest.h"
#include "support/fixtures.hpp"

namespace graphsoftmax {
namespace {

Index id(const ConcurrenceGraph& g, std::string_view w) { return g.vocab().find(w).value(); }

std::uint64_t edge(const ConcurrenceGraph& g, std::string_view a, std::string_view b) {
  return g.count(id(g, a), id(g, b));
}

TEST(TokenizeTest, WhitespaceLowerStripsPunctuation) {
  EXPECT_EQ(tokenize("I try to apply.", TokenizerMode::kWhitespaceLower),
            (std::vector<std::string>{"i", "try", "to", "apply"}));
  EXPECT_EQ(tokenize("\"Hello,\"  (World)!  don't", TokenizerMode::kWhitespaceLower),
            (std::vector<std::string>{"hello", "world", "don't"}));
}

TEST(TokenizeTest, WhitespaceOnlyIsEmpty) {
  EXPECT_TRUE(tokenize("  ", TokenizerMode::kWhitespaceLower).empty());
  EXPECT_TRUE(tokenize("", TokenizerMode::kWhitespaceLower).empty());
  EXPECT_TRUE(tokenize(" ... !! ", TokenizerMode::kWhitespaceLower).empty());
}

TEST(TokenizeTest, SplitsOnUnicodeWhitespace) {
  // U+00A0 and U+3000
  EXPECT_EQ(tokenize("caf\xC3\xA9\xC2\xA0" "bar\xE3\x80\x80qux", TokenizerMode::kWhitespaceLower),
            (std::vector<std::string>{"caf\xC3\xA9", "bar", "qux"}));
}

TEST(TokenizeTest, PretokenizedIdsVerbatim) {
  EXPECT_EQ(tokenize("17 42 17", TokenizerMode::kPretokenizedIds),
            (std::vector<std::string>{"17", "42", "17"}));
}

TEST(TokenizeTest, MalformedIdNamesToken) {
  try {
    tokenize("17 4x2 3", TokenizerMode::kPretokenizedIds);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("4x2"), std::string::npos);
  }
}

TEST(IngestTest, ExampleCounts) {
  const auto g = ingest_corpus(testing::example_corpus());
  EXPECT_EQ(g.size(), 17u);
  EXPECT_EQ(edge(g, "the", "method"), 3u);
  EXPECT_EQ(edge(g, "method", "suggested"), 3u);
  EXPECT_EQ(edge(g, "i", "try"), 2u);
  EXPECT_EQ(edge(g, "try", "to"), 2u);
  EXPECT_EQ(edge(g, "suggested", "in"), 2u);
  EXPECT_EQ(edge(g, "suggested", "by"), 1u);
  EXPECT_EQ(edge(g, "paper", "i"), 0u);  // no cross-sentence pairs
  EXPECT_EQ(g.out_degree(id(g, "book")), 0u);
}

TEST(IngestTest, SingleTokenHasNoEdges) {
  const std::vector<Sentence> corpus{{"a"}};
  const auto g = ingest_corpus(corpus);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(IngestTest, RepeatedPairAccumulates) {
  const std::vector<Sentence> corpus{{"a", "b"}, {"a", "b"}};
  const auto g = ingest_corpus(corpus);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(edge(g, "a", "b"), 2u);
}

TEST(IngestTest, EmptyCorpusAndEmptySentences) {
  EXPECT_THROW(ingest_corpus(std::vector<Sentence>{}), Error);
  const std::vector<Sentence> corpus{{}, {"x", "y"}, {}};
  const auto g = ingest_corpus(corpus);
  EXPECT_EQ(g.total_count(), 1u);
}

TEST(IngestTest, ExtendsExistingGraph) {
  const std::vector<Sentence> first{{"a", "b"}};
  const std::vector<Sentence> second{{"a", "b", "c"}};
  const auto g1 = ingest_corpus(first);
  const auto g2 = ingest_corpus(second, &g1);
  EXPECT_EQ(g2.vocab().words()[0], "a");
  EXPECT_EQ(g2.vocab().words()[1], "b");
  EXPECT_EQ(edge(g2, "a", "b"), 2u);
  EXPECT_EQ(edge(g2, "b", "c"), 1u);

  std::vector<Sentence> all{{"a", "b"}, {"a", "b", "c"}};
  EXPECT_EQ(g2, ingest_corpus(all));
}

TEST(IngestTest, PropertyEdgeTotalAndOrderIndependence) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto corpus = testing::toy_review_corpus(40, rng());
    std::uint64_t expected = 0;
    for (const auto& s : corpus) expected += s.size() - 1;
    const auto g = ingest_corpus(corpus);
    EXPECT_EQ(g.total_count(), expected);

    std::shuffle(corpus.begin(), corpus.end(), rng);
    EXPECT_EQ(ingest_corpus(corpus), g);
  }
}

TEST(NormalizeTest, ExampleSuggestedRow) {
  const auto g = ingest_corpus(testing::example_corpus());
  const auto adj = normalize(g, 1e-6);
  const Index s = id(g, "suggested");
  const auto cols = adj.matrix().row_cols(s);
  const auto vals = adj.matrix().row_values(s);
  ASSERT_EQ(cols.size(), 2u);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const double expected = cols[k] == id(g, "in") ? 2.0 / 3.000001 : 1.0 / 3.000001;
    EXPECT_DOUBLE_EQ(vals[k], expected);
  }
}

TEST(NormalizeTest, IsolatedRowIsZero) {
  const auto g = ingest_corpus(testing::example_corpus());
  const auto adj = normalize(g);
  EXPECT_EQ(adj.row_sum(id(g, "book")), 0.0);
  EXPECT_TRUE(adj.matrix().row_cols(id(g, "book")).empty());
}

TEST(NormalizeTest, SingleHeavyEdge) {
  const std::vector<Sentence> corpus(5, Sentence{"a", "b"});
  const auto g = ingest_corpus(corpus);
  const auto adj = normalize(g, 1e-6);
  EXPECT_DOUBLE_EQ(adj.matrix().values[0], 5.0 / (5.0 + 1e-6));
  EXPECT_LT(adj.matrix().values[0], 1.0);
}

TEST(NormalizeTest, RejectsNonPositiveEpsilon) {
  const auto g = ingest_corpus(testing::example_corpus());
  EXPECT_THROW(normalize(g, 0.0), Error);
  EXPECT_THROW(normalize(g, -1.0), Error);
}

TEST(NormalizeTest, PropertyRowSumsBelowOne) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = testing::random_graph(200, 6, seed);
    for (double eps : {1e-6, 1e-3, 1.0}) {
      const auto adj = normalize(g, eps);
      for (Index i = 0; i < g.size(); ++i) {
        const double s = adj.row_sum(i);
        const double deg = static_cast<double>(g.out_degree(i));
        EXPECT_LT(s, 1.0);
        EXPECT_NEAR(s, deg / (deg + eps), 1e-12);
      }
      EXPECT_LT(estimate_spectral_radius(adj, 50), 1.0 + 1e-6);
    }
  }
}

TEST(SpectralRadiusTest, HandCases) {
  NormalizedAdjacency zero(CsrMatrix<double>{3, {0, 0, 0, 0}, {}, {}}, 1e-6);
  EXPECT_EQ(estimate_spectral_radius(zero, 10), 0.0);

  NormalizedAdjacency scalar(CsrMatrix<double>{1, {0, 1}, {0}, {0.9}}, 1e-6);
  EXPECT_NEAR(estimate_spectral_radius(scalar, 10), 0.9, 1e-12);

  const double w = 4.0 / (4.0 + 1e-6);
  NormalizedAdjacency cycle(CsrMatrix<double>{2, {0, 1, 2}, {1, 0}, {w, w}}, 1e-6);
  EXPECT_NEAR(estimate_spectral_radius(cycle, 10), w, 1e-12);

  EXPECT_THROW(estimate_spectral_radius(cycle, 0), Error);
}

TEST(SpectralRadiusTest, DagIsNilpotent) {
  const auto g = ingest_corpus(testing::example_corpus());
  EXPECT_EQ(estimate_spectral_radius(normalize(g), 50), 0.0);
}

TEST(NormalizedAdjacencyTest, RejectsRowsSummingToOne) {
  EXPECT_THROW(NormalizedAdjacency(CsrMatrix<double>{2, {0, 2, 2}, {0, 1}, {0.5, 0.5}}, 1e-6),
               Error);
}

TEST(NormalizedAdjacencyTest, PaddedAddsIsolatedNodes) {
  const auto g = ingest_corpus(testing::example_corpus());
  const auto adj = normalize(g).padded(2);
  EXPECT_EQ(adj.size(), g.size() + 2);
  EXPECT_EQ(adj.row_sum(static_cast<Index>(g.size() + 1)), 0.0);
}

}  // namespace
}  // namespace graphsoftmax
