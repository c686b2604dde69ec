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

#include "graphsoftmax/vocabulary.hpp"

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"

namespace graphsoftmax {

Vocabulary::Vocabulary(std::vector<std::string> words) : words_(std::move(words)) {
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].empty()) {
      throw Error(ErrorKind::kFormat, fmt::format("empty vocabulary entry at id {}", i));
    }
    auto [it, inserted] = index_.emplace(words_[i], static_cast<Index>(i));
    if (!inserted) {
      throw Error(ErrorKind::kFormat,
                  fmt::format("duplicate vocabulary entry '{}' at ids {} and {}", words_[i],
                              it->second, i));
    }
  }
}

Index Vocabulary::add(std::string_view token) {
  if (token.empty()) throw Error(ErrorKind::kInvalidArgument, "empty token");
  auto it = index_.find(std::string(token));
  if (it != index_.end()) return it->second;
  const auto id = static_cast<Index>(words_.size());
  words_.emplace_back(token);
  index_.emplace(words_.back(), id);
  return id;
}

std::optional<Index> Vocabulary::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace graphsoftmax
