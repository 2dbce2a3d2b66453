// JSON encodings of graphs, partitions, merge traces and tag files.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tsctag/cluster_topic.hpp"
#include "tsctag/metrics.hpp"
#include "tsctag/partition.hpp"
#include "tsctag/pipeline.hpp"
#include "tsctag/sag.hpp"

namespace tsctag {

using nlohmann::json;

/// {"n": N, "edges": [{"x":..,"y":..,"w":..}, ...]}
json to_json(const Sag& graph);
Sag sag_from_json(const json& doc);

/// {"assignment": [topic id per comment]}
json to_json(const Partition& partition);
Partition partition_from_json(const json& doc);

/// [{"first":..,"second":..,"merged":..,"affinity":..}, ...]
json to_json(const std::vector<TopicMerge>& trace);

json params_to_json(const Params& params);

/// {"video_id", "clusterer", "density", "params", "tags":[{"word","score"}],
///  "topics":[{"topic_id","size","st","ct","top_words"}]}
json to_json(const VideoTags& video, bool with_topics);

/// A per-video word list: either a tag-file line (tags are objects with
/// "word") or a gold-file line (tags are plain strings).
struct TagList {
  std::string video_id;
  std::vector<std::string> words;
};

/// Reads JSON-lines of {"video_id", "tags": [...]}. Accepts both string
/// tags and {"word": ...} objects, keeping their order.
std::vector<TagList> parse_tag_lists(std::istream& in);
std::vector<TagList> load_tag_lists(const std::filesystem::path& path);

}  // namespace tsctag
