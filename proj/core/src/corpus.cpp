#include "tsctag/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace tsctag {

namespace {

using nlohmann::json;

std::string with_line(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(unsigned char c) {
  return c < 0x80 && std::ispunct(c) != 0;
}

std::string trim_punct(std::string_view token) {
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && is_ascii_punct(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && is_ascii_punct(static_cast<unsigned char>(token[e - 1]))) --e;
  return std::string(token.substr(b, e - b));
}

void lowercase_ascii(std::string& s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(with_line(line, message)), line_(line) {}

RawComment parse_comment_record(std::string_view line, std::size_t line_no) {
  json rec;
  try {
    rec = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
  }
  if (!rec.is_object()) throw ParseError(line_no, "record is not an object");

  RawComment raw;
  auto vid = rec.find("video_id");
  if (vid == rec.end() || !vid->is_string())
    throw ParseError(line_no, "missing or non-string video_id");
  raw.video_id = vid->get<std::string>();

  auto t = rec.find("t");
  if (t == rec.end() || !t->is_number())
    throw ParseError(line_no, "missing or non-numeric t");
  raw.t = t->get<double>();
  if (!std::isfinite(raw.t)) throw ParseError(line_no, "non-finite timestamp");
  if (raw.t < 0.0) throw ParseError(line_no, "negative timestamp");

  auto toks = rec.find("tokens");
  if (toks != rec.end()) {
    if (!toks->is_array()) throw ParseError(line_no, "tokens must be an array");
    std::vector<std::string> out;
    out.reserve(toks->size());
    for (const auto& tok : *toks) {
      if (!tok.is_string())
        throw ParseError(line_no, "tokens must be strings");
      out.push_back(tok.get<std::string>());
    }
    raw.tokens = std::move(out);
  }

  auto text = rec.find("text");
  if (text != rec.end()) {
    if (!text->is_string()) throw ParseError(line_no, "text must be a string");
    raw.text = text->get<std::string>();
  }
  if (!raw.tokens) {
    if (text == rec.end()) throw ParseError(line_no, "missing text or tokens");
    if (split_whitespace(raw.text).empty())
      throw ParseError(line_no, "empty text");
  }
  return raw;
}

std::vector<VideoComments> parse_comments(std::istream& in) {
  std::vector<VideoComments> videos;
  std::unordered_map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), is_space)) continue;
    RawComment raw = parse_comment_record(line, line_no);
    auto [it, inserted] = index.try_emplace(raw.video_id, videos.size());
    if (inserted) videos.push_back(VideoComments{raw.video_id, {}});
    videos[it->second].comments.push_back(std::move(raw));
  }
  return videos;
}

std::vector<VideoComments> load_comments(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_comments(in);
}

NormalizationConfig parse_normalization_config(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("normalization config: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError(0, "normalization config must be an object");

  NormalizationConfig cfg;
  if (auto it = doc.find("slang_map"); it != doc.end()) {
    if (!it->is_object()) throw ParseError(0, "slang_map must be an object");
    for (const auto& [key, value] : it->items()) {
      std::string k = key;
      lowercase_ascii(k);
      std::vector<std::string> repl;
      if (value.is_string()) {
        repl = split_whitespace(value.get<std::string>());
      } else if (value.is_array()) {
        for (const auto& w : value) {
          if (!w.is_string())
            throw ParseError(0, "slang_map replacement must hold strings");
          repl.push_back(w.get<std::string>());
        }
      } else {
        throw ParseError(0, "slang_map value must be a string or array");
      }
      cfg.slang_map[k] = std::move(repl);
    }
  }
  if (auto it = doc.find("stopwords"); it != doc.end()) {
    if (!it->is_array()) throw ParseError(0, "stopwords must be an array");
    for (const auto& w : *it) {
      if (!w.is_string()) throw ParseError(0, "stopwords must be strings");
      std::string s = w.get<std::string>();
      lowercase_ascii(s);
      cfg.stopwords.insert(std::move(s));
    }
  }
  if (auto it = doc.find("symbol_filter"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError(0, "symbol_filter must be a bool");
    cfg.symbol_filter = it->get<bool>();
  }
  return cfg;
}

NormalizationConfig load_normalization_config(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_normalization_config(in);
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_word_token(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return c >= 0x80 || std::isalnum(c) != 0;
  });
}

std::vector<std::string> normalize_tokens(std::span<const std::string> tokens,
                                          const NormalizationConfig& cfg) {
  std::vector<std::string> mapped;
  mapped.reserve(tokens.size());
  for (const auto& tok : tokens) {
    std::string lower = tok;
    lowercase_ascii(lower);
    // Replacements are emitted as-is; they are never looked up again.
    if (auto it = cfg.slang_map.find(lower); it != cfg.slang_map.end()) {
      for (const auto& r : it->second) {
        std::string w = r;
        lowercase_ascii(w);
        mapped.push_back(std::move(w));
      }
    } else {
      mapped.push_back(std::move(lower));
    }
  }

  std::vector<std::string> out;
  out.reserve(mapped.size());
  for (auto& tok : mapped) {
    if (cfg.symbol_filter) {
      if (!is_word_token(tok)) continue;
      tok = trim_punct(tok);
      if (tok.empty()) continue;
    }
    if (tok.empty() || cfg.stopwords.contains(tok)) continue;
    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<Comment> normalize_video(std::span<const RawComment> raws,
                                     const NormalizationConfig& cfg) {
  std::vector<std::size_t> order(raws.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return raws[a].t < raws[b].t;
                   });

  std::vector<Comment> out;
  out.reserve(raws.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const RawComment& raw = raws[order[pos]];
    std::vector<std::string> tokens =
        raw.tokens ? *raw.tokens : split_whitespace(raw.text);
    out.push_back(Comment{pos, raw.t, normalize_tokens(tokens, cfg)});
  }
  return out;
}

}  // namespace tsctag
