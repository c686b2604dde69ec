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

#include "graphsoftmax/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"

namespace graphsoftmax {

SimplexPoint::SimplexPoint(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorKind::kInvalidArgument, "empty simplex point");
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("component {} = {} is not a probability", i, v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorKind::kInvalidArgument, fmt::format("components sum to {}, not 1", sum));
  }
}

double simplex_shift(std::span<const double> a) {
  if (a.empty()) throw Error(ErrorKind::kInvalidArgument, "cannot project an empty vector");
  for (double v : a) {
    if (!std::isfinite(v)) throw Error(ErrorKind::kNumeric, "non-finite input");
  }
  std::vector<double> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  // The condition holds for a prefix of j = 1..N, so the last hit is k.
  double prefix = 0.0;
  double prefix_at_k = sorted[0];
  std::size_t k = 1;
  for (std::size_t j = 1; j <= sorted.size(); ++j) {
    prefix += sorted[j - 1];
    if (sorted[j - 1] + (1.0 - prefix) / static_cast<double>(j) > 0.0) {
      k = j;
      prefix_at_k = prefix;
    }
  }
  return (1.0 - prefix_at_k) / static_cast<double>(k);
}

SimplexPoint project_simplex(std::span<const double> a) {
  const double gamma = simplex_shift(a);
  std::vector<double> x(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) x[i] = std::max(a[i] + gamma, 0.0);
  return SimplexPoint(std::move(x));
}

}  // namespace graphsoftmax
