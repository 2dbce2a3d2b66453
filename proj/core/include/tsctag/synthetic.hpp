// Seeded generator of synthetic comment corpora with planted topics. Used as
// a test oracle and by the `gen` command.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tsctag/corpus.hpp"
#include "tsctag/embedding.hpp"

namespace tsctag {

struct SyntheticSpec {
  std::size_t videos = 1;
  std::size_t topics = 2;              // planted topics per video
  std::size_t comments_per_topic = 5;
  std::size_t vocab_per_topic = 8;
  double density = 20.0;               // comments per minute
  // Silence between consecutive topic windows, in seconds. `density` then
  // holds inside the windows only.
  double topic_gap = 0.0;
  double noise_fraction = 0.0;         // share of noise comments in a video
  std::size_t tokens_per_comment = 3;
  std::size_t dim = 32;
  std::size_t noise_vocab = 64;
  // Spread of word vectors around their topic direction (relative to a unit
  // topic direction).
  double word_spread = 0.35;
  // Weight of a shared per-video direction in every topic direction. Topics
  // of one video talk about the same content, so their centers correlate.
  double video_coherence = 0.5;
  // Probability that a topic comment replies to an earlier comment of the
  // same topic, reusing part of its wording instead of sampling fresh
  // topic words. Negative selects a density-dependent default: replies
  // dominate when comments are sparse and fade out as density grows.
  double reply_probability = -1.0;
  std::size_t tags_per_topic = 3;
  std::uint64_t seed = 1;
};

struct SyntheticVideo {
  std::string video_id;
  std::vector<RawComment> comments;         // sorted by t, distinct times
  std::vector<std::size_t> planted_labels;  // per comment; noise = unique label
  std::vector<bool> is_noise;
  std::vector<std::string> planted_tags;
  double duration_seconds = 0.0;
};

struct SyntheticCorpus {
  std::vector<SyntheticVideo> videos;
  EmbeddingTable embeddings{1};
};

/// Reply probability used when `SyntheticSpec::reply_probability` < 0.
double default_reply_probability(double density);

/// Deterministic for a given spec (including seed). Throws
/// std::invalid_argument for infeasible specs.
SyntheticCorpus generate_corpus(const SyntheticSpec& spec);

}  // namespace tsctag
