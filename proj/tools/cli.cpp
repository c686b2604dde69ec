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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "graphsoftmax/bleu.hpp"
#include "graphsoftmax/decode.hpp"
#include "graphsoftmax/error.hpp"
#include "graphsoftmax/evaluation.hpp"
#include "graphsoftmax/graph.hpp"
#include "graphsoftmax/graph_io.hpp"
#include "graphsoftmax/ngram_lm.hpp"
#include "graphsoftmax/solver.hpp"

namespace graphsoftmax::cli {

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool quiet = false;
};

struct SolverFlags {
  double lambda = 1.0;
  double alpha = 1e-4;
  int max_iters = 20;
  double tol = 1e-4;
  std::string tv_variant = "squared_norm";
  std::string init = "softmax_of_z";

  void attach(CLI::App* cmd) {
    cmd->add_option("--lambda", lambda, "graph total-variation weight")->capture_default_str();
    cmd->add_option("--alpha", alpha, "projected gradient step size")->capture_default_str();
    cmd->add_option("--max-iters", max_iters, "maximum solver iterations")->capture_default_str();
    cmd->add_option("--tol", tol, "stop once ||x_{t+1} - x_t||_2 < tol")->capture_default_str();
    cmd->add_option("--tv-variant", tv_variant, "penalty: norm | squared_norm")
        ->check(CLI::IsMember({"norm", "squared_norm"}))
        ->capture_default_str();
    cmd->add_option("--init", init, "solver start: softmax_of_z | uniform")
        ->check(CLI::IsMember({"softmax_of_z", "uniform"}))
        ->capture_default_str();
  }

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.lambda = lambda;
    cfg.alpha = alpha;
    cfg.max_iters = max_iters;
    cfg.tol = tol;
    cfg.tv_variant = parse_tv_variant(tv_variant);
    cfg.init = parse_init_kind(init);
    cfg.validate();
    return cfg;
  }
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
    case ErrorKind::kFormat: return kExitIo;
    case ErrorKind::kEmptyInput: return kExitEmpty;
    case ErrorKind::kDimension:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kNumeric: return kExitMismatch;
    case ErrorKind::kDegeneratePrompt: return kExitPrompt;
  }
  return kExitMismatch;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}'", path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

// One sentence per non-blank line.
std::vector<Sentence> read_corpus(const std::string& path, TokenizerMode mode) {
  std::vector<Sentence> sentences;
  for (const auto& line : read_lines(path)) {
    auto tokens = tokenize(line, mode);
    if (!tokens.empty()) sentences.push_back(std::move(tokens));
  }
  return sentences;
}

std::vector<std::vector<double>> read_logits(const std::string& path) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  for (const auto& line : read_lines(path)) {
    ++line_no;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos == line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
      if (ec != std::errc() || ptr != line.data() + end) {
        throw Error(ErrorKind::kFormat, fmt::format("{}:{}: malformed logit '{}'", path, line_no,
                                                    line.substr(pos, end - pos)));
      }
      row.push_back(value);
      pos = end;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::kEmptyInput, fmt::format("'{}' holds no logits", path));
  return rows;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}' for writing", path));
  out << content;
  if (!out.flush()) throw Error(ErrorKind::kIo, fmt::format("failed writing '{}'", path));
}

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

// ---------------------------------------------------------------------------

struct BuildGraphCommand {
  std::vector<std::string> corpora;
  std::string out_path;
  double epsilon = kDefaultEpsilon;
  std::string tokenizer = "whitespace_lower";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("build-graph", "build a 2-gram concurrence graph from a corpus");
    cmd->add_option("--corpus", corpora, "corpus file, one sentence per line (repeatable)")
        ->required();
    cmd->add_option("--out", out_path, "output graph file")->required();
    cmd->add_option("--epsilon", epsilon, "normalization smoothing for the reported bound")
        ->capture_default_str();
    cmd->add_option("--tokenizer", tokenizer, "whitespace_lower | pretokenized_ids")
        ->check(CLI::IsMember({"whitespace_lower", "pretokenized_ids"}))
        ->capture_default_str();
  }

  int run(std::ostream& out) const {
    const auto mode = parse_tokenizer_mode(tokenizer);
    std::vector<Sentence> sentences;
    for (const auto& path : corpora) {
      auto part = read_corpus(path, mode);
      sentences.insert(sentences.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
    const ConcurrenceGraph graph = ingest_corpus(sentences);
    const NormalizedAdjacency adj = normalize(graph, epsilon);
    save_graph(graph, out_path);

    out << fmt::format("N,{}\n", graph.size());
    out << fmt::format("nnz,{}\n", graph.num_edges());
    out << fmt::format("spectral_radius_bound,{:.8f}\n", estimate_spectral_radius(adj, 100));

    std::vector<std::tuple<std::uint64_t, Index, Index>> edges;
    const auto& counts = graph.counts();
    for (std::size_t i = 0; i < counts.dim; ++i) {
      for (std::size_t k = counts.row_ptr[i]; k < counts.row_ptr[i + 1]; ++k) {
        edges.emplace_back(counts.values[k], static_cast<Index>(i), counts.col_idx[k]);
      }
    }
    const std::size_t shown = std::min<std::size_t>(10, edges.size());
    std::partial_sort(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(shown), edges.end(),
                      [](const auto& a, const auto& b) {
                        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
                        return std::tie(std::get<1>(a), std::get<2>(a)) <
                               std::tie(std::get<1>(b), std::get<2>(b));
                      });
    for (std::size_t e = 0; e < shown; ++e) {
      const auto& [count, src, dst] = edges[e];
      out << fmt::format("edge,{},{},{}\n", graph.vocab().word(src), graph.vocab().word(dst), count);
    }
    return kExitOk;
  }
};

struct SolveCommand {
  std::string graph_path;
  std::string logits_path;
  std::string trace_path;
  std::string probs_path;
  std::optional<std::size_t> topk;
  double epsilon = kDefaultEpsilon;
  SolverFlags solver;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "solve", "graph softmax of each logit vector, side by side with plain softmax");
    cmd->add_option("--graph", graph_path, "GTVGRAPH v1 file")->required();
    cmd->add_option("--logits", logits_path, "one whitespace-separated logit vector per line")
        ->required();
    cmd->add_option("--trace", trace_path, "write iter,gap,objective records (CSV)");
    cmd->add_option("--probs-out", probs_path, "write each graph-softmax distribution (one line each)");
    cmd->add_option("--topk", topk, "rows in the side-by-side table (default: min(10, N))");
    cmd->add_option("--epsilon", epsilon, "normalization smoothing")->capture_default_str();
    solver.attach(cmd);
  }

  int run(std::ostream& out) const {
    const SolverConfig cfg = solver.config();
    const ConcurrenceGraph graph = load_graph(graph_path);
    const NormalizedAdjacency adj = normalize(graph, epsilon);
    const auto instances = read_logits(logits_path);
    const std::size_t k = topk.value_or(std::min<std::size_t>(10, graph.size()));

    std::string trace = "instance,iter,gap,objective\n";
    std::string probs;
    for (std::size_t n = 0; n < instances.size(); ++n) {
      const auto& z = instances[n];
      if (z.size() != graph.size()) {
        throw Error(ErrorKind::kDimension,
                    fmt::format("logit vector {} has length {} but the graph has {} nodes", n,
                                z.size(), graph.size()));
      }
      const SimplexPoint plain = softmax(z);
      const SolveResult result = graph_softmax(z, adj, cfg);
      const auto left = top_k(plain, graph.vocab(), k);
      const auto right = top_k(result.x, graph.vocab(), k);

      out << fmt::format("instance,{},iterations,{},converged,{},objective,{:.8f}\n", n,
                         result.iterations, result.converged ? 1 : 0, result.objective_final);
      out << "rank,softmax_token,softmax_prob,graph_token,graph_prob\n";
      for (std::size_t r = 0; r < left.size(); ++r) {
        out << fmt::format("{},{},{:.8f},{},{:.8f}\n", r + 1, left[r].first, left[r].second,
                           right[r].first, right[r].second);
      }
      for (std::size_t t = 0; t < result.trace.size(); ++t) {
        trace += fmt::format("{},{},{:.17g},{:.17g}\n", n, t + 1, result.trace[t],
                             result.objectives[t]);
      }
      for (std::size_t i = 0; i < result.x.size(); ++i) {
        if (i > 0) probs += ' ';
        probs += fmt::format("{:.17g}", result.x[i]);
      }
      probs += '\n';
    }
    if (!trace_path.empty()) write_file(trace_path, trace);
    if (!probs_path.empty()) write_file(probs_path, probs);
    return kExitOk;
  }
};

struct DecodeCommand {
  std::string graph_path;
  std::string corpus_path;
  std::string prompt;
  std::string mode = "greedy";
  std::string softmax_kind = "plain";
  std::string tokenizer = "whitespace_lower";
  int max_len = 150;
  int order = 3;
  double epsilon = kDefaultEpsilon;
  std::optional<std::uint64_t> seed;
  SolverFlags solver;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("decode", "continue a prompt with an n-gram LM");
    cmd->add_option("--graph", graph_path, "GTVGRAPH v1 file")->required();
    cmd->add_option("--corpus", corpus_path, "LM training corpus, one sentence per line")
        ->required();
    cmd->add_option("--prompt", prompt, "prompt text")->required();
    cmd->add_option("--mode", mode, "greedy | sample")
        ->check(CLI::IsMember({"greedy", "sample"}))
        ->capture_default_str();
    cmd->add_option("--softmax", softmax_kind, "plain | graph")
        ->check(CLI::IsMember({"plain", "graph"}))
        ->capture_default_str();
    cmd->add_option("--max-len", max_len, "maximum generated tokens")->capture_default_str();
    cmd->add_option("--order", order, "n-gram order")->capture_default_str();
    cmd->add_option("--epsilon", epsilon, "normalization smoothing")->capture_default_str();
    cmd->add_option("--tokenizer", tokenizer, "whitespace_lower | pretokenized_ids")
        ->check(CLI::IsMember({"whitespace_lower", "pretokenized_ids"}))
        ->capture_default_str();
    cmd->add_option("--seed", seed, "sampling seed (overrides the global --seed)");
    solver.attach(cmd);
  }

  int run(const GlobalOptions& global, std::ostream& out, std::ostream& err) const {
    const auto tok = parse_tokenizer_mode(tokenizer);
    DecodeConfig cfg;
    cfg.max_len = max_len;
    cfg.mode = parse_decode_mode(mode);
    cfg.softmax_kind = parse_softmax_kind(softmax_kind);
    cfg.seed = seed.value_or(global.seed);
    cfg.solver = solver.config();

    const ConcurrenceGraph graph = load_graph(graph_path);
    const NormalizedAdjacency adj = normalize(graph, epsilon);
    const auto corpus = read_corpus(corpus_path, tok);
    std::size_t dropped = 0;
    const NGramLM lm = train_ngram(to_ids(corpus, graph.vocab(), &dropped), graph.size(), order);
    if (dropped > 0 && !global.quiet) {
      err << fmt::format("warning: {} corpus tokens are not in the graph vocabulary\n", dropped);
    }

    std::vector<Index> prompt_ids;
    for (const auto& token : tokenize(prompt, tok)) {
      if (auto id = graph.vocab().find(token)) {
        prompt_ids.push_back(*id);
      } else if (!global.quiet) {
        err << fmt::format("warning: dropping out-of-vocabulary prompt token '{}'\n", token);
      }
    }
    if (prompt_ids.empty()) {
      throw Error(ErrorKind::kDegeneratePrompt, "prompt has no in-vocabulary tokens");
    }
    const auto continuation = decode(lm, adj, prompt_ids, cfg);
    out << join(to_tokens(continuation, graph.vocab())) << '\n';
    return kExitOk;
  }
};

struct EvalCommand {
  std::string candidates_path;
  std::string references_path;
  int max_n = 5;
  std::string lm_corpus_path;
  std::string eval_path;
  int order = 3;
  std::string tokenizer = "whitespace_lower";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("eval", "corpus BLEU and/or n-gram perplexity");
    auto* cand = cmd->add_option("--candidates", candidates_path, "generated sentences");
    auto* refs = cmd->add_option("--references", references_path, "reference sentences");
    cand->needs(refs);
    refs->needs(cand);
    cmd->add_option("--max-n", max_n, "highest BLEU order (2..5)")->capture_default_str();
    auto* lm = cmd->add_option("--lm-corpus", lm_corpus_path, "LM training corpus");
    auto* ev = cmd->add_option("--eval", eval_path, "sentences to score for perplexity");
    lm->needs(ev);
    ev->needs(lm);
    cmd->add_option("--order", order, "n-gram order")->capture_default_str();
    cmd->add_option("--tokenizer", tokenizer, "whitespace_lower | pretokenized_ids")
        ->check(CLI::IsMember({"whitespace_lower", "pretokenized_ids"}))
        ->capture_default_str();
  }

  int run(std::ostream& out) const {
    const auto tok = parse_tokenizer_mode(tokenizer);
    if (candidates_path.empty() && lm_corpus_path.empty()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "nothing to do: give --candidates/--references and/or --lm-corpus/--eval");
    }
    if (!candidates_path.empty()) {
      const auto candidates = read_corpus(candidates_path, tok);
      const auto references = read_corpus(references_path, tok);
      const BleuReport report = bleu(candidates, references, max_n);
      for (const auto& [n, score] : report.bleu_n) out << fmt::format("BLEU-{},{:.6f}\n", n, score);
      out << fmt::format("brevity_penalty,{:.6f}\n", report.brevity_penalty);
    }
    if (!lm_corpus_path.empty()) {
      const auto train = read_corpus(lm_corpus_path, tok);
      const auto held_out = read_corpus(eval_path, tok);
      if (held_out.empty()) throw Error(ErrorKind::kEmptyInput, "evaluation file is empty");
      Vocabulary vocab;
      for (const auto* part : {&train, &held_out}) {
        for (const auto& s : *part) {
          for (const auto& t : s) vocab.add(t);
        }
      }
      const NGramLM lm = train_ngram(to_ids(train, vocab), vocab.size(), order);
      out << fmt::format("perplexity,{:.6f}\n", perplexity(lm, to_ids(held_out, vocab)));
    }
    return kExitOk;
  }
};

struct SweepCommand {
  std::string corpus_path;
  std::vector<double> lambdas{0.25, 0.5, 1.0, 1.5, 2.0};
  std::size_t prompts = 100;
  std::size_t prompt_len = 2;
  int order = 3;
  int max_n = 5;
  int max_len = 150;
  std::string mode = "greedy";
  std::string tokenizer = "whitespace_lower";
  double epsilon = kDefaultEpsilon;
  std::optional<std::uint64_t> seed;
  SolverFlags solver;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "sweep", "decode corpus prompts for several lambdas and print a BLEU table");
    cmd->add_option("--corpus", corpus_path, "corpus: graph, LM and BLEU references")->required();
    cmd->add_option("--lambdas", lambdas, "lambda values")->delimiter(',')->capture_default_str();
    cmd->add_option("--prompts", prompts, "number of prompts")->capture_default_str();
    cmd->add_option("--prompt-len", prompt_len, "prompt tokens taken from each sentence")
        ->capture_default_str();
    cmd->add_option("--order", order, "n-gram order")->capture_default_str();
    cmd->add_option("--max-n", max_n, "highest BLEU order (2..5)")->capture_default_str();
    cmd->add_option("--max-len", max_len, "maximum generated tokens")->capture_default_str();
    cmd->add_option("--mode", mode, "greedy | sample")
        ->check(CLI::IsMember({"greedy", "sample"}))
        ->capture_default_str();
    cmd->add_option("--tokenizer", tokenizer, "whitespace_lower | pretokenized_ids")
        ->check(CLI::IsMember({"whitespace_lower", "pretokenized_ids"}))
        ->capture_default_str();
    cmd->add_option("--epsilon", epsilon, "normalization smoothing")->capture_default_str();
    cmd->add_option("--seed", seed, "sampling seed (overrides the global --seed)");
    solver.attach(cmd);
  }

  int run(const GlobalOptions& global, std::ostream& out) const {
    SweepConfig cfg;
    cfg.lambdas = lambdas;
    cfg.num_prompts = prompts;
    cfg.prompt_len = prompt_len;
    cfg.order = order;
    cfg.max_n = max_n;
    cfg.epsilon = epsilon;
    cfg.decode.max_len = max_len;
    cfg.decode.mode = parse_decode_mode(mode);
    cfg.decode.seed = seed.value_or(global.seed);
    cfg.decode.solver = solver.config();
    if (max_n < 2 || max_n > 5) throw Error(ErrorKind::kInvalidArgument, "--max-n must be in [2, 5]");

    const auto corpus = read_corpus(corpus_path, parse_tokenizer_mode(tokenizer));
    const SweepResult result = run_lambda_sweep(corpus, cfg);
    out << format_sweep_table(result, max_n);
    out << fmt::format("prompts,{}\n", result.num_prompts);
    out << fmt::format("lambda0_matches_plain,{}\n", result.lambda_zero_matches_plain ? 1 : 0);
    return kExitOk;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphsoftmax: graph total-variation regularized softmax"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--seed", global.seed, "seed for every random choice")->capture_default_str();
  app.add_flag("--quiet", global.quiet, "suppress warnings");

  BuildGraphCommand build_graph;
  SolveCommand solve;
  DecodeCommand decode_cmd;
  EvalCommand eval;
  SweepCommand sweep;
  build_graph.attach(app);
  solve.attach(app);
  decode_cmd.attach(app);
  eval.attach(app);
  sweep.attach(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMismatch;
  }

  try {
    if (app.got_subcommand("build-graph")) return build_graph.run(out);
    if (app.got_subcommand("solve")) return solve.run(out);
    if (app.got_subcommand("decode")) return decode_cmd.run(global, out, err);
    if (app.got_subcommand("eval")) return eval.run(out);
    if (app.got_subcommand("sweep")) return sweep.run(global, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kExitMismatch;
}

}  // namespace graphsoftmax::cli
