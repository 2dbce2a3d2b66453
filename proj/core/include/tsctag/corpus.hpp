// Comment stream parsing and token normalization.
#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tsctag {

/// Error raised for malformed input files. Carries the 1-based line number
/// of the offending record (0 when the error is not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One comment record as read from the input stream.
struct RawComment {
  std::string video_id;
  double t = 0.0;
  std::string text;
  // Pre-split tokens; takes precedence over `text` when present.
  std::optional<std::vector<std::string>> tokens;
};

struct VideoComments {
  std::string video_id;
  std::vector<RawComment> comments;  // input order
};

/// A normalized comment. `id` is its position in the (t, input order) total
/// order of its video.
struct Comment {
  std::size_t id = 0;
  double t = 0.0;
  std::vector<std::string> tokens;
};

struct NormalizationConfig {
  std::unordered_map<std::string, std::vector<std::string>> slang_map;
  std::unordered_set<std::string> stopwords;
  bool symbol_filter = true;
};

/// Parses a single JSON-lines record. `line_no` is only used for errors.
RawComment parse_comment_record(std::string_view line, std::size_t line_no);

/// Reads a JSON-lines comment stream. Blank lines are skipped. Videos are
/// returned in order of first appearance, comments within a video in input
/// order.
std::vector<VideoComments> parse_comments(std::istream& in);
std::vector<VideoComments> load_comments(const std::filesystem::path& path);

/// Reads `{"slang_map": {...}, "stopwords": [...], "symbol_filter": bool}`.
/// Slang replacements may be a string (whitespace-split) or an array.
NormalizationConfig parse_normalization_config(std::istream& in);
NormalizationConfig load_normalization_config(const std::filesystem::path& path);

/// Splits on ASCII whitespace.
std::vector<std::string> split_whitespace(std::string_view text);

/// True when the token carries at least one letter or digit. Bytes >= 0x80
/// (non-ASCII UTF-8) count as letters.
bool is_word_token(std::string_view token);

/// Lowercase, slang map (single pass), symbol filter, stopword filter.
std::vector<std::string> normalize_tokens(std::span<const std::string> tokens,
                                          const NormalizationConfig& cfg);

/// Normalizes one video's comments and orders them by (t, input order).
/// Comments whose tokens all filter away are kept with an empty token list.
std::vector<Comment> normalize_video(std::span<const RawComment> raws,
                                     const NormalizationConfig& cfg);

}  // namespace tsctag
