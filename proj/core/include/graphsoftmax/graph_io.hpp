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

#include <filesystem>
#include <iosfwd>

#include "graphsoftmax/graph.hpp"

namespace graphsoftmax {

// Text format, UTF-8, one record per line:
//
//   GTVGRAPH v1 <N> <nnz>
//   <token 0>
//   ...
//   <token N-1>
//   <src> <dst> <count>      (nnz lines, src ascending then dst ascending)

void write_graph(std::ostream& out, const ConcurrenceGraph& graph);
ConcurrenceGraph read_graph(std::istream& in);

/// Throws kIo when the file cannot be written.
void save_graph(const ConcurrenceGraph& graph, const std::filesystem::path& path);

/// Throws kIo for an unreadable file and kFormat for a bad header, version
/// mismatch, truncation, duplicate vocabulary entries or unsorted edges.
ConcurrenceGraph load_graph(const std::filesystem::path& path);

}  // namespace graphsoftmax
