// A ten-comment football clip: one topic about Messi's goal, one crowning
// the MVP, and two unrelated remarks about the background music and lag.
#pragma once

#include <string>
#include <vector>

#include "tsctag/corpus.hpp"
#include "tsctag/embedding.hpp"

namespace tsctag::testing {

struct Scenario {
  VideoComments video;
  EmbeddingTable embeddings{4};
  std::vector<std::size_t> planted;  // expected topic per comment, in time order
  std::vector<std::string> topic_words;
  std::vector<std::string> noise_words;
};

inline Scenario football_scenario() {
  Scenario s;
  auto add_word = [&](const char* w, std::vector<float> v) { s.embeddings.insert(w, v); };
  add_word("messi", {1.0f, 0.0f, 0.0f, 0.0f});
  add_word("goal", {0.9f, 0.1f, 0.0f, 0.0f});
  add_word("mvp", {0.0f, 1.0f, 0.0f, 0.0f});
  add_word("king", {0.1f, 0.9f, 0.0f, 0.0f});
  add_word("bgm", {0.0f, 0.0f, 1.0f, 0.0f});
  add_word("lag", {0.0f, 0.0f, 0.0f, 1.0f});

  s.video.video_id = "clip";
  auto add = [&](double t, std::string text) {
    RawComment r;
    r.video_id = "clip";
    r.t = t;
    r.text = std::move(text);
    s.video.comments.push_back(std::move(r));
  };
  add(0.0, "Messi goal");
  add(1.5, "messi");
  add(3.0, "bgm");
  add(4.0, "MESSI goal!");
  add(5.5, "messi messi");
  add(20.0, "mvp");
  add(21.0, "mvp king");
  add(22.0, "lag");
  add(23.0, "king mvp");
  add(24.5, "mvp");
  s.planted = {0, 0, 1, 0, 0, 2, 2, 3, 2, 2};
  s.topic_words = {"messi", "goal", "mvp", "king"};
  s.noise_words = {"bgm", "lag"};
  return s;
}

}  // namespace tsctag::testing
