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
#include <span>
#include <vector>

namespace graphsoftmax {

/// A probability vector: nonnegative components summing to 1 (within 1e-9).
class SimplexPoint {
 public:
  static constexpr double kSumTolerance = 1e-9;

  SimplexPoint() = default;

  /// Throws kInvalidArgument if `values` is empty, has a negative or
  /// non-finite component, or does not sum to 1.
  explicit SimplexPoint(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::vector<double> release() && { return std::move(values_); }

  bool operator==(const SimplexPoint&) const = default;

 private:
  std::vector<double> values_;
};

/// Euclidean projection onto the probability simplex.
///
/// Sorts a copy of the input in descending order b_1 >= ... >= b_N, finds the
/// largest k with b_k + (1 - sum_{j<=k} b_j) / k > 0 and returns
/// x_i = max(a_i + gamma, 0) with gamma = (1 - sum_{j<=k} b_j) / k.
/// O(N log N). Throws kNumeric on NaN/Inf input, kInvalidArgument on N = 0.
SimplexPoint project_simplex(std::span<const double> a);

/// The shift gamma used by project_simplex (exposed for optimality checks).
double simplex_shift(std::span<const double> a);

}  // namespace graphsoftmax
