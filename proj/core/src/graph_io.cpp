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

#include "graphsoftmax/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "graphsoftmax/error.hpp"

namespace graphsoftmax {

namespace {

constexpr std::string_view kMagic = "GTVGRAPH";
constexpr std::string_view kVersion = "v1";

template <typename T>
T parse_field(std::string_view field, std::size_t line_no, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::kFormat,
                fmt::format("line {}: invalid {} '{}'", line_no, what, field));
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos == line.size()) break;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

void write_graph(std::ostream& out, const ConcurrenceGraph& graph) {
  const auto& counts = graph.counts();
  out << fmt::format("{} {} {} {}\n", kMagic, kVersion, graph.size(), graph.num_edges());
  for (const auto& word : graph.vocab().words()) {
    if (word.find_first_of("\n\r") != std::string::npos) {
      throw Error(ErrorKind::kFormat, "vocabulary token contains a line break");
    }
    out << word << '\n';
  }
  for (std::size_t i = 0; i < counts.dim; ++i) {
    for (std::size_t k = counts.row_ptr[i]; k < counts.row_ptr[i + 1]; ++k) {
      out << fmt::format("{} {} {}\n", i, counts.col_idx[k], counts.values[k]);
    }
  }
}

ConcurrenceGraph read_graph(std::istream& in) {
  std::string line;
  if (!read_line(in, line)) throw Error(ErrorKind::kFormat, "missing GTVGRAPH header");
  const auto header = split_fields(line);
  if (header.size() != 4 || header[0] != kMagic) {
    throw Error(ErrorKind::kFormat, fmt::format("bad header '{}'", line));
  }
  if (header[1] != kVersion) {
    throw Error(ErrorKind::kFormat,
                fmt::format("unsupported graph version '{}' (expected {})", header[1], kVersion));
  }
  const auto n = parse_field<std::size_t>(header[2], 1, "vocabulary size");
  const auto nnz = parse_field<std::size_t>(header[3], 1, "edge count");

  std::vector<std::string> words;
  words.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!read_line(in, line)) {
      throw Error(ErrorKind::kFormat,
                  fmt::format("truncated file: expected {} vocabulary lines, got {}", n, i));
    }
    words.push_back(line);
  }
  Vocabulary vocab(std::move(words));

  CsrMatrix<std::uint64_t> counts;
  counts.dim = n;
  counts.row_ptr.assign(n + 1, 0);
  counts.col_idx.reserve(nnz);
  counts.values.reserve(nnz);
  std::size_t prev_src = 0;
  for (std::size_t e = 0; e < nnz; ++e) {
    const std::size_t line_no = n + 2 + e;
    if (!read_line(in, line)) {
      throw Error(ErrorKind::kFormat,
                  fmt::format("truncated file: expected {} edges, got {}", nnz, e));
    }
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw Error(ErrorKind::kFormat, fmt::format("line {}: expected '<src> <dst> <count>'", line_no));
    }
    const auto src = parse_field<std::size_t>(fields[0], line_no, "source id");
    const auto dst = parse_field<Index>(fields[1], line_no, "destination id");
    const auto count = parse_field<std::uint64_t>(fields[2], line_no, "count");
    if (src >= n || dst >= n) {
      throw Error(ErrorKind::kFormat, fmt::format("line {}: id out of range (N = {})", line_no, n));
    }
    if (e > 0 && (src < prev_src || (src == prev_src && dst <= counts.col_idx.back()))) {
      throw Error(ErrorKind::kFormat, fmt::format("line {}: edges not in ascending order", line_no));
    }
    if (count == 0) throw Error(ErrorKind::kFormat, fmt::format("line {}: zero count", line_no));
    counts.row_ptr[src + 1] += 1;
    counts.col_idx.push_back(dst);
    counts.values.push_back(count);
    prev_src = src;
  }
  while (read_line(in, line)) {
    if (!line.empty()) throw Error(ErrorKind::kFormat, "trailing data after last edge");
  }
  for (std::size_t i = 0; i < n; ++i) counts.row_ptr[i + 1] += counts.row_ptr[i];
  return ConcurrenceGraph(std::move(vocab), std::move(counts));
}

void save_graph(const ConcurrenceGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}' for writing", path.string()));
  write_graph(out, graph);
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, fmt::format("failed writing '{}'", path.string()));
}

ConcurrenceGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}'", path.string()));
  return read_graph(in);
}

}  // namespace graphsoftmax
