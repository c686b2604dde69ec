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
#include <random>
#include <vector>

#include "graphsoftmax/graph.hpp"

namespace graphsoftmax::testing {

/// The three example sentences, tokenized with kWhitespaceLower.
std::vector<Sentence> example_corpus();

/// Random graph over words "w0".."w{n-1}": each row gets up to
/// `edges_per_row` distinct random successors with counts in [1, 20].
ConcurrenceGraph random_graph(std::size_t n, std::size_t edges_per_row, std::uint64_t seed);

/// Review-style sentences from a small template grammar.
std::vector<Sentence> toy_review_corpus(std::size_t sentences, std::uint64_t seed);

std::vector<double> random_vector(std::size_t n, double lo, double hi, std::mt19937_64& rng);

/// Strictly positive point with entries >= floor, summing to 1.
std::vector<double> random_interior_point(std::size_t n, double floor, std::mt19937_64& rng);

}  // namespace graphsoftmax::testing
