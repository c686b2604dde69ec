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
#include <cstdint>
#include <span>
#include <vector>

namespace graphsoftmax {

using Index = std::uint32_t;

/// Square compressed-sparse-row matrix. Column indices inside a row are
/// strictly ascending and every stored value is nonzero.
template <typename T>
struct CsrMatrix {
  std::size_t dim = 0;
  std::vector<std::size_t> row_ptr{0};
  std::vector<Index> col_idx;
  std::vector<T> values;

  std::size_t nnz() const noexcept { return values.size(); }

  std::span<const Index> row_cols(std::size_t row) const {
    return {col_idx.data() + row_ptr[row], row_ptr[row + 1] - row_ptr[row]};
  }
  std::span<const T> row_values(std::size_t row) const {
    return {values.data() + row_ptr[row], row_ptr[row + 1] - row_ptr[row]};
  }

  bool operator==(const CsrMatrix&) const = default;
};

// y = A x
inline void spmv(const CsrMatrix<double>& a, std::span<const double> x,
                 std::span<double> y) {
  for (std::size_t i = 0; i < a.dim; ++i) {
    double sum = 0.0;
    for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      sum += a.values[k] * x[a.col_idx[k]];
    }
    y[i] = sum;
  }
}

// y = A^T x, scattered row by row so the summation order is fixed.
inline void spmv_transpose(const CsrMatrix<double>& a, std::span<const double> x,
                           std::span<double> y) {
  for (std::size_t j = 0; j < a.dim; ++j) y[j] = 0.0;
  for (std::size_t i = 0; i < a.dim; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      y[a.col_idx[k]] += a.values[k] * xi;
    }
  }
}

}  // namespace graphsoftmax
