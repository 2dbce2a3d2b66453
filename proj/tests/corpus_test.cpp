#include <gtest/gtest.h>

#include <sstream>

#include "tsctag/corpus.hpp"

namespace tsctag {
namespace {

RawComment raw(double t, std::string text) {
  RawComment r;
  r.video_id = "v";
  r.t = t;
  r.text = std::move(text);
  return r;
}

TEST(ParseComments, MapsFieldsDirectly) {
  std::istringstream in(R"({"video_id":"v1","t":3.5,"text":"great goal"})");
  const auto videos = parse_comments(in);
  ASSERT_EQ(videos.size(), 1u);
  ASSERT_EQ(videos[0].comments.size(), 1u);
  const RawComment& c = videos[0].comments[0];
  EXPECT_EQ(c.video_id, "v1");
  EXPECT_DOUBLE_EQ(c.t, 3.5);
  EXPECT_EQ(c.text, "great goal");
  EXPECT_FALSE(c.tokens.has_value());
}

TEST(ParseComments, RejectsNegativeTimestampWithLineNumber) {
  std::istringstream in("{\"video_id\":\"v1\",\"t\":1,\"text\":\"a\"}\n"
                        "{\"video_id\":\"v1\",\"t\":-1,\"text\":\"b\"}\n");
  try {
    parse_comments(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("negative timestamp"), std::string::npos);
  }
}

TEST(ParseComments, GroupsByVideoKeepingReadOrder) {
  std::istringstream in("{\"video_id\":\"v1\",\"t\":5.0,\"text\":\"a\"}\n"
                        "{\"video_id\":\"v2\",\"t\":1.0,\"text\":\"x\"}\n"
                        "\n"
                        "{\"video_id\":\"v1\",\"t\":2.0,\"text\":\"b\"}\n");
  const auto videos = parse_comments(in);
  ASSERT_EQ(videos.size(), 2u);
  EXPECT_EQ(videos[0].video_id, "v1");
  ASSERT_EQ(videos[0].comments.size(), 2u);
  EXPECT_DOUBLE_EQ(videos[0].comments[0].t, 5.0);
  EXPECT_DOUBLE_EQ(videos[0].comments[1].t, 2.0);
  EXPECT_EQ(videos[1].video_id, "v2");
}

TEST(ParseComments, RejectsMalformedRecords) {
  EXPECT_THROW(parse_comment_record("{not json", 1), ParseError);
  EXPECT_THROW(parse_comment_record(R"({"video_id":"v","t":1})", 1), ParseError);
  EXPECT_THROW(parse_comment_record(R"({"t":1,"text":"a"})", 1), ParseError);
  EXPECT_THROW(parse_comment_record(R"({"video_id":"v","text":"a"})", 1), ParseError);
  EXPECT_THROW(parse_comment_record(R"({"video_id":"v","t":1,"text":"   "})", 1), ParseError);
  EXPECT_THROW(parse_comment_record(R"({"video_id":"v","t":"1","text":"a"})", 1), ParseError);
  EXPECT_THROW(parse_comment_record(R"([1,2])", 1), ParseError);
}

TEST(ParseComments, TokensWinOverText) {
  const RawComment c =
      parse_comment_record(R"({"video_id":"v","t":0,"text":"a b","tokens":["x","y","z"]})", 1);
  ASSERT_TRUE(c.tokens.has_value());
  EXPECT_EQ(*c.tokens, (std::vector<std::string>{"x", "y", "z"}));
  const auto out = normalize_video(std::vector<RawComment>{c}, NormalizationConfig{});
  EXPECT_EQ(out[0].tokens, (std::vector<std::string>{"x", "y", "z"}));
}

TEST(NormalizeVideo, SlangMapsLaughter) {
  NormalizationConfig cfg;
  cfg.slang_map["233"] = {"laughter"};
  const auto out = normalize_video(std::vector<RawComment>{raw(0, "233")}, cfg);
  EXPECT_EQ(out[0].tokens, std::vector<std::string>{"laughter"});
}

TEST(NormalizeVideo, StableSortByTimeThenInputOrder) {
  const std::vector<RawComment> raws{raw(7, "a"), raw(3, "b"), raw(3, "c")};
  const auto out = normalize_video(raws, NormalizationConfig{});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].tokens[0], "b");
  EXPECT_EQ(out[1].tokens[0], "c");
  EXPECT_EQ(out[2].tokens[0], "a");
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i].id, i);
}

TEST(NormalizeVideo, DropsSmileyWithSymbolFilter) {
  const auto out = normalize_video(std::vector<RawComment>{raw(0, "nice (^_^)")}, {});
  EXPECT_EQ(out[0].tokens, std::vector<std::string>{"nice"});

  NormalizationConfig keep;
  keep.symbol_filter = false;
  const auto kept = normalize_video(std::vector<RawComment>{raw(0, "nice (^_^)")}, keep);
  EXPECT_EQ(kept[0].tokens, (std::vector<std::string>{"nice", "(^_^)"}));
}

TEST(NormalizeVideo, KeepsCommentsWhoseTokensAllFilterAway) {
  NormalizationConfig cfg;
  cfg.stopwords = {"the"};
  const auto out = normalize_video(std::vector<RawComment>{raw(0, "the !!!"), raw(1, "goal")}, cfg);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(out[0].tokens.empty());
  EXPECT_EQ(out[1].tokens, std::vector<std::string>{"goal"});
}

TEST(NormalizeTokens, LowercasesThenMapsThenFilters) {
  NormalizationConfig cfg;
  cfg.slang_map["lol"] = {"laughter", "out"};
  cfg.stopwords = {"out"};
  const std::vector<std::string> in{"LOL", "Goal!", "\"messi\""};
  EXPECT_EQ(normalize_tokens(in, cfg), (std::vector<std::string>{"laughter", "goal", "messi"}));
}

TEST(NormalizeTokens, SlangIsAppliedOnce) {
  NormalizationConfig cfg;
  cfg.slang_map["a"] = {"b"};
  cfg.slang_map["b"] = {"c"};
  const std::vector<std::string> in{"a", "b"};
  EXPECT_EQ(normalize_tokens(in, cfg), (std::vector<std::string>{"b", "c"}));
}

TEST(NormalizeTokens, NonAsciiTokensSurviveSymbolFilter) {
  const std::vector<std::string> in{"梅西", "。", "…"};
  const auto out = normalize_tokens(in, NormalizationConfig{});
  EXPECT_EQ(out.front(), "梅西");
}

TEST(NormalizeVideo, IsDeterministicAndPreservesCount) {
  std::vector<RawComment> raws;
  for (int i = 0; i < 50; ++i) raws.push_back(raw((i * 37) % 11, "w" + std::to_string(i % 7)));
  const auto a = normalize_video(raws, {});
  const auto b = normalize_video(raws, {});
  ASSERT_EQ(a.size(), raws.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].tokens, b[i].tokens);
    EXPECT_EQ(a[i].t, b[i].t);
    if (i > 0) EXPECT_LE(a[i - 1].t, a[i].t);
  }
}

TEST(NormalizationConfig, ParsesAllFields) {
  std::istringstream in(
      R"({"slang_map":{"233":"laughter","YYDS":["forever","god"]},"stopwords":["The"],"symbol_filter":false})");
  const auto cfg = parse_normalization_config(in);
  EXPECT_EQ(cfg.slang_map.at("233"), std::vector<std::string>{"laughter"});
  EXPECT_EQ(cfg.slang_map.at("yyds"), (std::vector<std::string>{"forever", "god"}));
  EXPECT_TRUE(cfg.stopwords.contains("the"));
  EXPECT_FALSE(cfg.symbol_filter);
}

TEST(NormalizationConfig, RejectsWrongTypes) {
  std::istringstream bad_map(R"({"slang_map":[1]})");
  EXPECT_THROW(parse_normalization_config(bad_map), ParseError);
  std::istringstream bad_json("{");
  EXPECT_THROW(parse_normalization_config(bad_json), ParseError);
}

}  // namespace
}  // namespace tsctag
