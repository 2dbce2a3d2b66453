#include "commands.hpp"

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <CLI11.hpp>

#include "tsctag/corpus.hpp"
#include "tsctag/embedding.hpp"
#include "tsctag/json_io.hpp"
#include "tsctag/metrics.hpp"

namespace tsctag::cli {

namespace {

struct Inputs {
  std::vector<VideoComments> videos;
  EmbeddingTable embeddings{1};
  NormalizationConfig norm;
};

// Loads comments, embeddings and the optional normalization config.
// Returns nullopt (after reporting) on any I/O or parse failure.
std::optional<Inputs> load_inputs(const InputOptions& opt, std::ostream& err) {
  Inputs in;
  try {
    if (opt.embeddings.empty() || !std::filesystem::exists(opt.embeddings)) {
      err << "error: embeddings file not found: '" << opt.embeddings << "'\n";
      return std::nullopt;
    }
    in.embeddings = load_embeddings(opt.embeddings);
    for (const auto& w : in.embeddings.duplicate_words())
      err << "warning: duplicate embedding row for '" << w << "', last row kept\n";
    if (!opt.norm_config.empty()) in.norm = load_normalization_config(opt.norm_config);
    in.videos = load_comments(opt.comments);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
  return in;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
// thrown by any task is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

// Writes to the named file, or to `fallback` when the name is empty.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      stream_ = &file_;
    }
  }
  bool ok() const { return static_cast<bool>(*stream_); }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<PreparedVideo> prepare_all(const Inputs& in, unsigned jobs) {
  std::vector<PreparedVideo> prepared(in.videos.size());
  parallel_for(in.videos.size(), jobs, [&](std::size_t i) {
    prepared[i] = prepare_video(in.videos[i], in.norm, in.embeddings);
  });
  return prepared;
}

json dialogue_trace_json(const std::vector<DialogueMerge>& merges) {
  json out = json::array();
  for (const auto& m : merges)
    out.push_back({{"x", m.x}, {"y", m.y}, {"density", m.density}, {"size", m.merged_size}});
  return out;
}

}  // namespace

int run_extract(const ExtractOptions& opt, std::ostream& out, std::ostream& err) {
  auto in = load_inputs(opt, err);
  if (!in) return kExitIo;
  try {
    const auto prepared = prepare_all(*in, opt.jobs);
    std::optional<IdfTable> corpus_idf;
    if (opt.pipeline.idf_mode == IdfMode::corpus) {
      corpus_idf.emplace();
      for (const auto& v : prepared)
        for (const auto& c : v.comments) corpus_idf->add_document(c.tokens);
    }

    std::vector<VideoTags> results(prepared.size());
    parallel_for(prepared.size(), opt.jobs, [&](std::size_t i) {
      results[i] = extract_tags(prepared[i], opt.pipeline, in->norm.stopwords,
                                corpus_idf ? &*corpus_idf : nullptr,
                                opt.with_topics ? 5 : 0);
    });

    Output sink(opt.output, out);
    if (!sink.ok()) {
      err << "error: cannot write " << opt.output << '\n';
      return kExitIo;
    }
    for (const auto& r : results) {
      if (r.tags.empty()) err << "warning: video '" << r.video_id << "' has no tags\n";
      json line = to_json(r, opt.with_topics);
      line["idf_mode"] = std::string(to_string(opt.pipeline.idf_mode));
      line["k"] = opt.pipeline.k;
      *sink << line.dump() << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int run_cluster(const ClusterOptions& opt, std::ostream& out, std::ostream& err) {
  auto in = load_inputs(opt, err);
  if (!in) return kExitIo;
  try {
    const auto prepared = prepare_all(*in, opt.jobs);
    std::vector<Clustering> results(prepared.size());
    parallel_for(prepared.size(), opt.jobs, [&](std::size_t i) {
      const ClustererKind kind = choose_clusterer(opt.pipeline.clusterer, prepared[i].density,
                                                  opt.pipeline.density_threshold);
      results[i] = cluster_video(prepared[i], kind, opt.pipeline);
    });

    Output sink(opt.output, out);
    if (!sink.ok()) {
      err << "error: cannot write " << opt.output << '\n';
      return kExitIo;
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      const Clustering& c = results[i];
      json line = to_json(c.partition);
      line["video_id"] = prepared[i].video_id;
      line["clusterer"] = std::string(to_string(c.kind));
      line["density"] = prepared[i].density;
      line["params"] = params_to_json(c.params);
      line["topic_count"] = c.partition.topic_count();
      if (opt.dump_graph) line["graph"] = to_json(c.graph);
      if (opt.trace)
        line["trace"] = c.kind == ClustererKind::topic_center ? to_json(c.topic_trace)
                                                              : dialogue_trace_json(c.dialogue_merges);
      *sink << line.dump() << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int run_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<TagList> tags, gold;
  try {
    tags = load_tag_lists(opt.tags);
    gold = load_tag_lists(opt.gold);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  if (opt.ks.empty()) {
    err << "error: empty k list\n";
    return kExitIo;
  }
  std::unordered_map<std::string, const TagList*> by_id;
  for (const auto& t : tags) by_id.emplace(t.video_id, &t);

  struct Accum {
    std::vector<double> p, r, f1, ap;
  };
  std::map<std::size_t, Accum> acc;
  std::vector<std::string> missing;
  std::ostringstream csv;
  csv << "video_id,k,precision,recall,f1,ap\n";
  csv << std::setprecision(10);

  for (const auto& g : gold) {
    if (g.words.empty()) {
      err << "warning: empty gold list for '" << g.video_id << "', skipped\n";
      continue;
    }
    auto it = by_id.find(g.video_id);
    if (it == by_id.end()) {
      missing.push_back(g.video_id);
      continue;
    }
    const auto& ranked = it->second->words;
    for (std::size_t k : opt.ks) {
      const PrfScore s = precision_recall_f1(ranked, g.words, k);
      const std::span<const std::string> top(ranked.data(), std::min(k, ranked.size()));
      const double ap = average_precision(top, g.words);
      auto& a = acc[k];
      a.p.push_back(s.precision);
      a.r.push_back(s.recall);
      a.f1.push_back(s.f1);
      a.ap.push_back(ap);
      csv << g.video_id << ',' << k << ',' << s.precision << ',' << s.recall << ',' << s.f1
          << ',' << ap << '\n';
    }
  }

  json metrics = json::array();
  for (std::size_t k : opt.ks) {
    const auto& a = acc[k];
    metrics.push_back({{"k", k},
                       {"videos", a.p.size()},
                       {"precision", mean(a.p)},
                       {"recall", mean(a.r)},
                       {"f1", mean(a.f1)},
                       {"map", mean(a.ap)}});
  }
  json summary = {{"metrics", std::move(metrics)}, {"missing", missing}};

  if (!opt.csv.empty()) {
    std::ofstream f(opt.csv);
    if (!f) {
      err << "error: cannot write " << opt.csv << '\n';
      return kExitIo;
    }
    f << csv.str();
  }
  Output sink(opt.output, out);
  if (!sink.ok()) {
    err << "error: cannot write " << opt.output << '\n';
    return kExitIo;
  }
  *sink << summary.dump(2) << '\n';
  for (const auto& id : missing) err << "error: video '" << id << "' has no extracted tags\n";
  return missing.empty() ? kExitOk : kExitMismatch;
}

int run_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err) {
  auto in = load_inputs(opt, err);
  if (!in) return kExitIo;

  struct Row {
    std::string video_id;
    double density = 0.0;
    std::optional<ClusterQuality> dialogue, topic;
  };
  std::vector<Row> rows;
  try {
    const auto prepared = prepare_all(*in, opt.jobs);
    rows.resize(prepared.size());
    parallel_for(prepared.size(), opt.jobs, [&](std::size_t i) {
      const PreparedVideo& v = prepared[i];
      Row& row = rows[i];
      row.video_id = v.video_id;
      row.density = v.density;
      for (ClustererKind kind : {ClustererKind::dialogue, ClustererKind::topic_center}) {
        const Clustering c = cluster_video(v, kind, opt.pipeline);
        if (c.partition.topic_count() < 2) continue;  // H undefined
        const ClusterQuality q = cluster_quality(c.partition, v.times, v.vectors, opt.eval_gamma);
        (kind == ClustererKind::dialogue ? row.dialogue : row.topic) = q;
      }
    });
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }

  std::vector<HComparison> comparable;
  json videos = json::array();
  std::ostringstream csv;
  csv << std::setprecision(10) << "video_id,density,bucket,dialogue_h,topic_h,winner\n";
  for (const auto& r : rows) {
    std::string winner = "none";
    if (r.dialogue && r.topic) {
      comparable.push_back(HComparison{r.dialogue->h, r.topic->h, r.density});
      if (r.dialogue->h > r.topic->h) winner = "dialogue";
      if (r.topic->h > r.dialogue->h) winner = "topic-center";
    } else {
      err << "warning: video '" << r.video_id << "' has H undefined for one clusterer\n";
    }
    const auto bucket = density_bucket_label(density_bucket(r.density));
    json v = {{"video_id", r.video_id},
              {"density", r.density},
              {"bucket", std::string(bucket)},
              {"winner", winner}};
    v["dialogue_h"] = r.dialogue ? json(r.dialogue->h) : json(nullptr);
    v["topic_h"] = r.topic ? json(r.topic->h) : json(nullptr);
    videos.push_back(std::move(v));
    csv << r.video_id << ',' << r.density << ',' << bucket << ','
        << (r.dialogue ? std::to_string(r.dialogue->h) : "") << ','
        << (r.topic ? std::to_string(r.topic->h) : "") << ',' << winner << '\n';
  }

  const HHitTable table = h_hit(comparable);
  json buckets = json::array();
  for (std::size_t b = 0; b < kDensityBuckets; ++b)
    buckets.push_back({{"bucket", std::string(density_bucket_label(b))},
                       {"videos", table.videos[b]},
                       {"d_hit", table.dialogue_hits[b]},
                       {"t_hit", table.topic_hits[b]}});
  json report = {{"eval_gamma", opt.eval_gamma},
                 {"buckets", std::move(buckets)},
                 {"videos", std::move(videos)}};

  if (!opt.csv.empty()) {
    std::ofstream f(opt.csv);
    if (!f) {
      err << "error: cannot write " << opt.csv << '\n';
      return kExitIo;
    }
    f << csv.str();
  }
  Output sink(opt.output, out);
  if (!sink.ok()) {
    err << "error: cannot write " << opt.output << '\n';
    return kExitIo;
  }
  *sink << report.dump(2) << '\n';
  return kExitOk;
}

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  SyntheticCorpus corpus;
  try {
    corpus = generate_corpus(opt.spec);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  namespace fs = std::filesystem;
  const fs::path dir(opt.out_dir.empty() ? "." : opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create " << dir << ": " << ec.message() << '\n';
    return kExitIo;
  }

  std::ofstream comments(dir / "comments.jsonl");
  std::ofstream gold(dir / "gold.jsonl");
  std::ofstream planted(dir / "planted.jsonl");
  std::ofstream embeddings(dir / "embeddings.txt");
  if (!comments || !gold || !planted || !embeddings) {
    err << "error: cannot write into " << dir << '\n';
    return kExitIo;
  }
  std::size_t total = 0;
  for (const auto& v : corpus.videos) {
    for (const auto& c : v.comments) {
      comments << json{{"video_id", c.video_id}, {"t", c.t}, {"text", c.text}}.dump() << '\n';
      ++total;
    }
    gold << json{{"video_id", v.video_id}, {"tags", v.planted_tags}}.dump() << '\n';
    json p = to_json(Partition::from_labels(v.planted_labels));
    p["video_id"] = v.video_id;
    p["noise"] = v.is_noise;
    p["duration"] = v.duration_seconds;
    planted << p.dump() << '\n';
  }
  write_embeddings(embeddings, corpus.embeddings);
  out << "wrote " << corpus.videos.size() << " videos, " << total << " comments, "
      << corpus.embeddings.size() << " words to " << dir.string() << '\n';
  return kExitOk;
}

namespace {

std::vector<std::size_t> parse_k_list(const std::string& text) {
  std::vector<std::size_t> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size() || v == 0) throw CLI::ValidationError("--k", "bad k value '" + item + "'");
    ks.push_back(v);
  }
  return ks;
}

// Options shared by commands that run the pipeline.
struct PipelineFlags {
  std::optional<double> gamma;
  std::string clusterer = "auto";
  std::string idf_mode = "video";

  void add(CLI::App* sub, InputOptions& opt) {
    sub->add_option("comments", opt.comments, "Comment stream (JSON lines)")->required();
    sub->add_option("--embeddings", opt.embeddings, "word2vec text file")->required();
    sub->add_option("--norm-config", opt.norm_config, "Normalization config (JSON)");
    sub->add_option("-o,--output", opt.output, "Output file (default stdout)");
    sub->add_option("--gamma-t", gamma, "Decay rate per second (default 0.12 / 0.13)");
    sub->add_option("--rho-d", opt.pipeline.rho_d, "Dialogue density threshold")->capture_default_str();
    sub->add_option("--rho-c", opt.pipeline.rho_c, "Topic-center affinity threshold")->capture_default_str();
    sub->add_option("--turns", opt.pipeline.turns, "Influence iteration turns (T)")->capture_default_str();
    sub->add_option("--tol", opt.pipeline.tol, "Influence convergence tolerance")->capture_default_str();
    sub->add_option("--edge-cutoff-eps", opt.pipeline.edge_cutoff_eps, "Minimal decay factor for an edge")
        ->capture_default_str();
    sub->add_option("--k", opt.pipeline.k, "Tags per video")->capture_default_str();
    sub->add_option("--idf-mode", idf_mode, "video | corpus")->capture_default_str();
    sub->add_option("--clusterer", clusterer, "dialogue | topic-center | auto")->capture_default_str();
    sub->add_option("--density-threshold", opt.pipeline.density_threshold,
                    "Comments/min at which auto switches to topic-center")
        ->capture_default_str();
    sub->add_option("--jobs", opt.jobs, "Videos processed concurrently")->capture_default_str();
  }

  void apply(InputOptions& opt) const {
    opt.pipeline.gamma_t = gamma;
    opt.pipeline.clusterer = parse_clusterer(clusterer);
    opt.pipeline.idf_mode = parse_idf_mode(idf_mode);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Video tag extraction from time-sync comments", "tsctag"};
  app.require_subcommand(1);

  ExtractOptions extract;
  PipelineFlags extract_flags;
  auto* extract_cmd = app.add_subcommand("extract", "Rank tags per video");
  extract_flags.add(extract_cmd, extract);
  extract_cmd->add_flag("--topics", extract.with_topics, "Include per-topic summaries");

  ClusterOptions cluster;
  PipelineFlags cluster_flags;
  auto* cluster_cmd = app.add_subcommand("cluster", "Partition comments into topics");
  cluster_flags.add(cluster_cmd, cluster);
  cluster_cmd->add_flag("--dump-graph", cluster.dump_graph, "Include the association graph");
  cluster_cmd->add_flag("--trace", cluster.trace, "Include the ordered merge list");

  EvalOptions eval;
  std::string k_list = "5,10,15";
  auto* eval_cmd = app.add_subcommand("eval", "Score extracted tags against gold tags");
  eval_cmd->add_option("tags", eval.tags, "Tag file written by extract")->required();
  eval_cmd->add_option("gold", eval.gold, "Gold tags (JSON lines)")->required();
  eval_cmd->add_option("--k", k_list, "Comma-separated cutoffs")->capture_default_str();
  eval_cmd->add_option("--csv", eval.csv, "Per-video CSV report");
  eval_cmd->add_option("-o,--output", eval.output, "JSON summary (default stdout)");

  CompareOptions compare;
  PipelineFlags compare_flags;
  auto* compare_cmd = app.add_subcommand("compare", "H-hit comparison of both clusterers");
  compare_flags.add(compare_cmd, compare);
  compare_cmd->add_option("--eval-gamma", compare.eval_gamma, "Decay rate used by the H score")
      ->capture_default_str();
  compare_cmd->add_option("--csv", compare.csv, "Per-video CSV detail");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
  SyntheticSpec& s = gen.spec;
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory")->required();
  gen_cmd->add_option("--videos", s.videos)->capture_default_str();
  gen_cmd->add_option("--topics", s.topics)->capture_default_str();
  gen_cmd->add_option("--comments-per-topic", s.comments_per_topic)->capture_default_str();
  gen_cmd->add_option("--vocab-per-topic", s.vocab_per_topic)->capture_default_str();
  gen_cmd->add_option("--density", s.density, "Comments per minute")->capture_default_str();
  gen_cmd->add_option("--noise", s.noise_fraction, "Noise comment fraction")->capture_default_str();
  gen_cmd->add_option("--tokens-per-comment", s.tokens_per_comment)->capture_default_str();
  gen_cmd->add_option("--dim", s.dim)->capture_default_str();
  gen_cmd->add_option("--word-spread", s.word_spread)->capture_default_str();
  gen_cmd->add_option("--topic-gap", s.topic_gap, "Seconds of silence between topic windows")
      ->capture_default_str();
  gen_cmd->add_option("--video-coherence", s.video_coherence, "Shared direction weight in topics")
      ->capture_default_str();
  gen_cmd->add_option("--reply-probability", s.reply_probability,
                      "Negative: density-dependent default")
      ->capture_default_str();
  gen_cmd->add_option("--seed", s.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (extract_cmd->parsed()) extract_flags.apply(extract);
    if (cluster_cmd->parsed()) cluster_flags.apply(cluster);
    if (compare_cmd->parsed()) compare_flags.apply(compare);
    if (eval_cmd->parsed()) eval.ks = parse_k_list(k_list);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }

  if (extract_cmd->parsed()) return run_extract(extract, out, err);
  if (cluster_cmd->parsed()) return run_cluster(cluster, out, err);
  if (eval_cmd->parsed()) return run_eval(eval, out, err);
  if (compare_cmd->parsed()) return run_compare(compare, out, err);
  return run_gen(gen, out, err);
}

}  // namespace tsctag::cli
