// Command implementations behind the `tsctag` executable. Each command
// writes its primary output to `out`, diagnostics to `err`, and returns the
// process exit code.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tsctag/pipeline.hpp"
#include "tsctag/synthetic.hpp"

namespace tsctag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitIo = 2;

struct InputOptions {
  std::string comments;
  std::string embeddings;
  std::string norm_config;  // optional
  std::string output;       // empty: stdout
  PipelineConfig pipeline;
  unsigned jobs = 1;
};

struct ExtractOptions : InputOptions {
  bool with_topics = false;
};

struct ClusterOptions : InputOptions {
  bool dump_graph = false;
  bool trace = false;
};

struct EvalOptions {
  std::string tags;
  std::string gold;
  std::vector<std::size_t> ks{5, 10, 15};
  std::string csv;     // optional per-video report
  std::string output;  // JSON summary; empty: stdout
};

struct CompareOptions : InputOptions {
  double eval_gamma = 0.14;
  std::string csv;  // optional per-video detail
};

struct GenOptions {
  std::string out_dir;
  SyntheticSpec spec;
};

int run_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err);
int run_cluster(const ClusterOptions& opt, std::ostream& out, std::ostream& err);
int run_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err);
int run_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err);
int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsctag::cli
