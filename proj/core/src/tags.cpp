#include "tsctag/tags.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsctag {

IdfTable::IdfTable(std::span<const std::vector<std::string>> documents) {
  for (const auto& doc : documents) add_document(doc);
}

void IdfTable::add_document(std::span<const std::string> tokens) {
  ++documents_;
  std::unordered_set<std::string_view> seen;
  for (const auto& tok : tokens) {
    if (!seen.insert(tok).second) continue;
    auto it = df_.find(std::string_view(tok));
    if (it == df_.end())
      df_.emplace(tok, 1);
    else
      ++it->second;
  }
}

std::size_t IdfTable::document_frequency(std::string_view word) const {
  auto it = df_.find(word);
  return it == df_.end() ? 0 : it->second;
}

double IdfTable::operator()(std::string_view word) const {
  auto it = df_.find(word);
  if (it == df_.end())
    throw std::out_of_range("idf: unknown word '" + std::string(word) + "'");
  return std::log((1.0 + static_cast<double>(documents_)) /
                  (1.0 + static_cast<double>(it->second))) +
         1.0;
}

IdfTable idf(std::span<const Comment> comments) {
  IdfTable table;
  for (const auto& c : comments) table.add_document(c.tokens);
  return table;
}

RankedTags top_k(std::unordered_map<std::string, double> scores, std::size_t k) {
  RankedTags ranked;
  ranked.reserve(scores.size());
  for (auto& [word, score] : scores) ranked.push_back(ScoredWord{word, score});
  auto better = [](const ScoredWord& a, const ScoredWord& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  };
  if (k < ranked.size()) {
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k),
                      ranked.end(), better);
    ranked.resize(k);
  } else {
    std::sort(ranked.begin(), ranked.end(), better);
  }
  return ranked;
}

RankedTags swidf_rank(std::span<const Comment> comments,
                      std::span<const double> weights, const IdfTable& idf,
                      std::size_t k, const Stopwords& stopwords) {
  if (weights.size() != comments.size())
    throw std::invalid_argument("swidf_rank: weights/comments size mismatch");
  if (k == 0) throw std::invalid_argument("swidf_rank: k must be >= 1");
  std::unordered_map<std::string, double> weight_sum;
  for (std::size_t j = 0; j < comments.size(); ++j) {
    std::unordered_set<std::string_view> seen;
    for (const auto& tok : comments[j].tokens) {
      if (stopwords.contains(tok) || !seen.insert(tok).second) continue;
      weight_sum[tok] += weights[j];
    }
  }
  for (auto& [word, s] : weight_sum) s *= idf(word);
  return top_k(std::move(weight_sum), k);
}

RankedTags tfidf_rank(std::span<const Comment> comments, const IdfTable& idf,
                      std::size_t k, const Stopwords& stopwords) {
  if (k == 0) throw std::invalid_argument("tfidf_rank: k must be >= 1");
  std::unordered_map<std::string, double> tf;
  for (const auto& c : comments)
    for (const auto& tok : c.tokens)
      if (!stopwords.contains(tok)) tf[tok] += 1.0;
  for (auto& [word, s] : tf) s *= idf(word);
  return top_k(std::move(tf), k);
}

}  // namespace tsctag
