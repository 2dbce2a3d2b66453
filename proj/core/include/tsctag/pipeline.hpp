// Per-video pipeline: normalize, embed, build the graph, cluster, weight and
// rank tags.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsctag/cluster_dialogue.hpp"
#include "tsctag/cluster_topic.hpp"
#include "tsctag/corpus.hpp"
#include "tsctag/embedding.hpp"
#include "tsctag/influence.hpp"
#include "tsctag/params.hpp"
#include "tsctag/partition.hpp"
#include "tsctag/sag.hpp"
#include "tsctag/tags.hpp"

namespace tsctag {

enum class ClustererKind { dialogue, topic_center, automatic };

std::string_view to_string(ClustererKind kind);
/// Accepts "dialogue", "topic-center" and "auto".
ClustererKind parse_clusterer(std::string_view name);

enum class IdfMode { video, corpus };
std::string_view to_string(IdfMode mode);
IdfMode parse_idf_mode(std::string_view name);

inline constexpr double kAutoDensityThreshold = 60.0;

struct PipelineConfig {
  // Unset: 0.12 for dialogue, 0.13 for topic-center.
  std::optional<double> gamma_t;
  double rho_d = kDefaultRhoD;
  double rho_c = kDefaultRhoC;
  int turns = kDefaultTurns;
  double tol = kDefaultConvergenceTol;
  double edge_cutoff_eps = kDefaultEdgeCutoff;
  std::size_t k = 10;
  IdfMode idf_mode = IdfMode::video;
  ClustererKind clusterer = ClustererKind::automatic;
  double density_threshold = kAutoDensityThreshold;

  /// Effective parameters for a concrete clusterer; validated.
  Params params_for(ClustererKind concrete) const;
};

/// Dialogue below `threshold` comments per minute, topic-center otherwise.
/// A concrete request is returned unchanged.
ClustererKind choose_clusterer(ClustererKind requested, double density,
                               double threshold);

struct PreparedVideo {
  std::string video_id;
  std::vector<Comment> comments;
  std::vector<double> times;
  std::vector<Vector> vectors;
  std::size_t unknown_only = 0;  // comments with no known token
  double duration_seconds = 0.0;
  double density = 0.0;          // comments per minute
};

/// Normalizes a video's comments and attaches sentence vectors. The video
/// duration is taken as its last timestamp.
PreparedVideo prepare_video(const VideoComments& raw, const NormalizationConfig& norm,
                            const EmbeddingTable& table);

struct Clustering {
  ClustererKind kind = ClustererKind::dialogue;
  Params params;
  Sag graph;
  Partition partition;
  std::vector<DialogueMerge> dialogue_merges;
  std::vector<TopicMerge> topic_trace;
  std::size_t queue_pushes = 0;
};

/// Builds the graph with the clusterer's decay rate and partitions it.
/// `kind` must be concrete (not automatic).
Clustering cluster_video(const PreparedVideo& video, ClustererKind kind,
                         const PipelineConfig& config);

struct TopicSummary {
  std::size_t topic_id = 0;
  std::size_t size = 0;
  double st = 0.0;
  double ct = 0.0;
  std::vector<std::string> top_words;
};

struct VideoTags {
  std::string video_id;
  double density = 0.0;
  Clustering clustering;
  std::vector<double> popularity;
  InfluenceResult influence;
  std::vector<double> weights;
  RankedTags tags;
  std::vector<TopicSummary> topics;
};

/// Full pipeline for one prepared video. `corpus_idf`, when given, replaces
/// the per-video IDF.
VideoTags extract_tags(const PreparedVideo& video, const PipelineConfig& config,
                       const Stopwords& stopwords = {},
                       const IdfTable* corpus_idf = nullptr,
                       std::size_t words_per_topic = 5);

}  // namespace tsctag
