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

#include "graphsoftmax/error.hpp"

namespace graphsoftmax {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kIo: return "i/o error";
    case ErrorKind::kFormat: return "format error";
    case ErrorKind::kEmptyInput: return "empty input";
    case ErrorKind::kDimension: return "dimension mismatch";
    case ErrorKind::kNumeric: return "numeric error";
    case ErrorKind::kDegeneratePrompt: return "degenerate prompt";
  }
  return "unknown error";
}

}  // namespace graphsoftmax
