#include "tsctag/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "tsctag/metrics.hpp"

namespace tsctag {

std::string_view to_string(ClustererKind kind) {
  switch (kind) {
    case ClustererKind::dialogue: return "dialogue";
    case ClustererKind::topic_center: return "topic-center";
    case ClustererKind::automatic: return "auto";
  }
  return "?";
}

ClustererKind parse_clusterer(std::string_view name) {
  if (name == "dialogue") return ClustererKind::dialogue;
  if (name == "topic-center") return ClustererKind::topic_center;
  if (name == "auto") return ClustererKind::automatic;
  throw std::invalid_argument("unknown clusterer '" + std::string(name) + "'");
}

std::string_view to_string(IdfMode mode) {
  return mode == IdfMode::video ? "video" : "corpus";
}

IdfMode parse_idf_mode(std::string_view name) {
  if (name == "video") return IdfMode::video;
  if (name == "corpus") return IdfMode::corpus;
  throw std::invalid_argument("unknown idf mode '" + std::string(name) + "'");
}

Params PipelineConfig::params_for(ClustererKind concrete) const {
  if (concrete == ClustererKind::automatic)
    throw std::invalid_argument("params_for: clusterer must be concrete");
  Params p;
  p.gamma_t = gamma_t.value_or(concrete == ClustererKind::dialogue ? kDialogueGamma
                                                                   : kTopicCenterGamma);
  p.rho_d = rho_d;
  p.rho_c = rho_c;
  p.turns = turns;
  p.tol = tol;
  p.edge_cutoff_eps = edge_cutoff_eps;
  p.validate();
  return p;
}

ClustererKind choose_clusterer(ClustererKind requested, double density,
                               double threshold) {
  if (requested != ClustererKind::automatic) return requested;
  return density < threshold ? ClustererKind::dialogue : ClustererKind::topic_center;
}

PreparedVideo prepare_video(const VideoComments& raw, const NormalizationConfig& norm,
                            const EmbeddingTable& table) {
  PreparedVideo v;
  v.video_id = raw.video_id;
  v.comments = normalize_video(raw.comments, norm);
  v.times.reserve(v.comments.size());
  v.vectors.reserve(v.comments.size());
  for (const auto& c : v.comments) {
    SentenceVector sv = sentence_vector(c.tokens, table);
    if (sv.known_token_count == 0) ++v.unknown_only;
    v.times.push_back(c.t);
    v.vectors.push_back(std::move(sv.values));
  }
  v.duration_seconds = v.times.empty() ? 0.0 : v.times.back();
  v.density = comment_density(v.comments.size(), v.duration_seconds);
  return v;
}

Clustering cluster_video(const PreparedVideo& video, ClustererKind kind,
                         const PipelineConfig& config) {
  Clustering c;
  c.kind = kind;
  c.params = config.params_for(kind);
  c.graph = build_sag(video.times, video.vectors,
                      SagOptions{c.params.gamma_t, c.params.edge_cutoff_eps});
  if (kind == ClustererKind::dialogue) {
    DialogueResult r = cluster_dialogue(c.graph, c.params.rho_d);
    c.partition = std::move(r.partition);
    c.dialogue_merges = std::move(r.merges);
  } else {
    TopicClusterResult r = cluster_topic(
        video.times, video.vectors, TopicClusterOptions{c.params.gamma_t, c.params.rho_c, true});
    c.partition = std::move(r.partition);
    c.topic_trace = std::move(r.trace);
    c.queue_pushes = r.queue_pushes;
  }
  return c;
}

namespace {

std::vector<TopicSummary> summarize_topics(const PreparedVideo& video,
                                           const Partition& partition,
                                           std::span<const double> weights,
                                           const IdfTable& idf_table,
                                           const Stopwords& stopwords,
                                           std::size_t words_per_topic) {
  std::vector<TopicSummary> out;
  for (std::size_t t = 0; t < partition.topic_count(); ++t) {
    TopicSummary s;
    s.topic_id = t;
    const auto members = partition.members(t);
    s.size = members.size();
    s.st = video.times[members.front()];
    double sum_t = 0.0;
    std::vector<Comment> comments;
    std::vector<double> w;
    for (std::size_t m : members) {
      sum_t += video.times[m];
      s.st = std::min(s.st, video.times[m]);
      comments.push_back(video.comments[m]);
      w.push_back(weights[m]);
    }
    s.ct = sum_t / static_cast<double>(members.size());
    for (auto& tag : swidf_rank(comments, w, idf_table, words_per_topic, stopwords))
      s.top_words.push_back(std::move(tag.word));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

VideoTags extract_tags(const PreparedVideo& video, const PipelineConfig& config,
                       const Stopwords& stopwords, const IdfTable* corpus_idf,
                       std::size_t words_per_topic) {
  VideoTags out;
  out.video_id = video.video_id;
  out.density = video.density;
  const ClustererKind kind =
      choose_clusterer(config.clusterer, video.density, config.density_threshold);
  out.clustering = cluster_video(video, kind, config);
  if (video.comments.empty()) return out;

  const Params& p = out.clustering.params;
  out.popularity = popularity(out.clustering.partition);
  const InfluenceMatrix matrix = influence_matrix(out.clustering.graph, out.clustering.partition);
  out.influence = iterate_influence(matrix, p.turns, p.tol);
  out.weights = comment_weights(out.popularity, out.influence.values);

  const IdfTable local = corpus_idf ? IdfTable{} : idf(video.comments);
  const IdfTable& table = corpus_idf ? *corpus_idf : local;
  out.tags = swidf_rank(video.comments, out.weights, table, config.k, stopwords);
  if (words_per_topic > 0)
    out.topics = summarize_topics(video, out.clustering.partition, out.weights, table,
                                  stopwords, words_per_topic);
  return out;
}

}  // namespace tsctag
