// IDF, SW-IDF tag ranking and the TF-IDF baseline.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tsctag/corpus.hpp"

namespace tsctag {

struct ScoredWord {
  std::string word;
  double score = 0.0;

  friend bool operator==(const ScoredWord&, const ScoredWord&) = default;
};

/// Ordered by descending score, ties by ascending word.
using RankedTags = std::vector<ScoredWord>;

/// Smoothed inverse document frequency ln((1 + N) / (1 + df)) + 1, where
/// each document is one comment's token list.
class IdfTable {
 public:
  IdfTable() = default;
  explicit IdfTable(std::span<const std::vector<std::string>> documents);

  /// Counts one more document.
  void add_document(std::span<const std::string> tokens);

  std::size_t document_count() const noexcept { return documents_; }
  std::size_t document_frequency(std::string_view word) const;
  /// Throws std::out_of_range for words never seen.
  double operator()(std::string_view word) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::size_t documents_ = 0;
  std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> df_;
};

/// IDF over the comments of one video.
IdfTable idf(std::span<const Comment> comments);

using Stopwords = std::unordered_set<std::string>;

/// score(word) = (Σ W_j over comments j containing the word, each comment
/// counted once) * idf(word). Returns the top `k` (all words if fewer).
RankedTags swidf_rank(std::span<const Comment> comments,
                      std::span<const double> weights, const IdfTable& idf,
                      std::size_t k, const Stopwords& stopwords = {});

/// score(word) = (occurrences in the video) * idf(word).
RankedTags tfidf_rank(std::span<const Comment> comments, const IdfTable& idf,
                      std::size_t k, const Stopwords& stopwords = {});

/// Sorts by descending score then ascending word, and truncates to `k`.
RankedTags top_k(std::unordered_map<std::string, double> scores, std::size_t k);

}  // namespace tsctag
