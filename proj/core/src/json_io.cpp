#include "tsctag/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>

namespace tsctag {

json to_json(const Sag& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) edges.push_back({{"x", e.x}, {"y", e.y}, {"w", e.w}});
  return {{"n", graph.node_count()}, {"edges", std::move(edges)}};
}

Sag sag_from_json(const json& doc) {
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges"))
    edges.push_back(Edge{e.at("x").get<NodeId>(), e.at("y").get<NodeId>(), e.at("w").get<double>()});
  return Sag(doc.at("n").get<std::size_t>(), std::move(edges));
}

json to_json(const Partition& partition) {
  return {{"assignment", std::vector<std::size_t>(partition.assignment().begin(),
                                                  partition.assignment().end())}};
}

Partition partition_from_json(const json& doc) {
  const auto labels = doc.at("assignment").get<std::vector<std::size_t>>();
  return Partition::from_labels(labels);
}

json to_json(const std::vector<TopicMerge>& trace) {
  json out = json::array();
  for (const auto& m : trace)
    out.push_back({{"first", m.first},
                   {"second", m.second},
                   {"merged", m.merged},
                   {"affinity", m.affinity}});
  return out;
}

json params_to_json(const Params& p) {
  return {{"gamma_t", p.gamma_t},     {"rho_d", p.rho_d}, {"rho_c", p.rho_c},
          {"turns", p.turns},         {"tol", p.tol},
          {"edge_cutoff_eps", p.edge_cutoff_eps}};
}

json to_json(const VideoTags& video, bool with_topics) {
  json tags = json::array();
  for (const auto& t : video.tags) tags.push_back({{"word", t.word}, {"score", t.score}});
  json out = {{"video_id", video.video_id},
              {"clusterer", std::string(to_string(video.clustering.kind))},
              {"density", video.density},
              {"params", params_to_json(video.clustering.params)},
              {"topic_count", video.clustering.partition.topic_count()},
              {"influence_turns", video.influence.turns},
              {"tags", std::move(tags)}};
  if (with_topics) {
    json topics = json::array();
    for (const auto& t : video.topics)
      topics.push_back({{"topic_id", t.topic_id},
                        {"size", t.size},
                        {"st", t.st},
                        {"ct", t.ct},
                        {"top_words", t.top_words}});
    out["topics"] = std::move(topics);
  }
  return out;
}

std::vector<TagList> parse_tag_lists(std::istream& in) {
  std::vector<TagList> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
      continue;
    try {
      const json doc = json::parse(line);
      TagList list;
      list.video_id = doc.at("video_id").get<std::string>();
      for (const auto& t : doc.at("tags")) {
        if (t.is_string())
          list.words.push_back(t.get<std::string>());
        else
          list.words.push_back(t.at("word").get<std::string>());
      }
      out.push_back(std::move(list));
    } catch (const json::exception& e) {
      throw ParseError(line_no, std::string("bad tag record: ") + e.what());
    }
  }
  return out;
}

std::vector<TagList> load_tag_lists(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_tag_lists(in);
}

}  // namespace tsctag
