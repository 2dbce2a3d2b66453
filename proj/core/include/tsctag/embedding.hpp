// Word vectors, sentence vectors and cosine similarity.
#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tsctag {

using Vector = std::vector<double>;

/// Pretrained word vectors of a fixed dimension. Immutable once loaded.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }

  /// Inserts or replaces `word`. Returns true when an entry was replaced.
  bool insert(std::string word, std::span<const float> values);

  std::optional<std::span<const float>> find(std::string_view word) const;

  /// All words, sorted.
  std::vector<std::string> words() const;

  /// Words that appeared on more than one row while loading (last row wins).
  const std::vector<std::string>& duplicate_words() const noexcept {
    return duplicates_;
  }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::size_t dim_;
  std::unordered_map<std::string, std::vector<float>, Hash, std::equal_to<>>
      vectors_;
  std::vector<std::string> duplicates_;
};

/// Reads the word2vec text format: a "<vocab_size> <dim>" header followed by
/// one "word v1 ... v_dim" row per word.
EmbeddingTable parse_embeddings(std::istream& in);
EmbeddingTable load_embeddings(const std::filesystem::path& path);

/// Writes `table` in the word2vec text format, words sorted.
void write_embeddings(std::ostream& out, const EmbeddingTable& table);

struct SentenceVector {
  Vector values;
  std::size_t known_token_count = 0;
};

/// Mean of the vectors of the tokens present in `table`. Unknown tokens are
/// skipped; with no known tokens the result is the zero vector.
SentenceVector sentence_vector(std::span<const std::string> tokens,
                               const EmbeddingTable& table);

/// a·b / (|a||b|), clamped to [-1, 1]. Returns 0 if either norm is 0.
/// Throws std::invalid_argument on length mismatch.
double cosine(std::span<const double> a, std::span<const double> b);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

}  // namespace tsctag
