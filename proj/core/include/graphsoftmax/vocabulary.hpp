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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphsoftmax/csr_matrix.hpp"

namespace graphsoftmax {

/// Bijection between tokens and dense ids [0, size()).
class Vocabulary {
 public:
  Vocabulary() = default;

  /// Throws kFormat on a duplicate or empty token.
  explicit Vocabulary(std::vector<std::string> words);

  /// Returns the id of `token`, appending it when unseen.
  Index add(std::string_view token);

  std::optional<Index> find(std::string_view token) const;
  const std::string& word(Index id) const { return words_.at(id); }
  std::span<const std::string> words() const { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  bool operator==(const Vocabulary& other) const { return words_ == other.words_; }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, Index> index_;
};

}  // namespace graphsoftmax
