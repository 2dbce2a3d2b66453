#include "tsctag/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tsctag/corpus.hpp"

namespace tsctag {

EmbeddingTable::EmbeddingTable(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("embedding dim must be positive");
}

bool EmbeddingTable::insert(std::string word, std::span<const float> values) {
  if (values.size() != dim_)
    throw std::invalid_argument("embedding row has wrong dimension");
  std::vector<float> v(values.begin(), values.end());
  auto [it, inserted] = vectors_.insert_or_assign(std::move(word), std::move(v));
  if (!inserted) duplicates_.push_back(it->first);
  return !inserted;
}

std::optional<std::span<const float>> EmbeddingTable::find(
    std::string_view word) const {
  auto it = vectors_.find(word);
  if (it == vectors_.end()) return std::nullopt;
  return std::span<const float>(it->second);
}

namespace {

std::size_t parse_count(std::string_view field, std::size_t line_no,
                        const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line_no, std::string("bad header ") + what);
  return value;
}

}  // namespace

EmbeddingTable parse_embeddings(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++line_no;
  auto header = split_whitespace(line);
  if (header.size() != 2) throw ParseError(line_no, "header arity");
  const std::size_t vocab = parse_count(header[0], line_no, "vocab size");
  const std::size_t dim = parse_count(header[1], line_no, "dim");
  if (dim == 0) throw ParseError(line_no, "dim must be positive");

  EmbeddingTable table(dim);
  std::vector<float> row(dim);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_whitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != dim + 1) throw ParseError(line_no, "row arity");
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string& f = fields[i + 1];
      // strtod handles the exponent/inf/nan spellings word2vec tools emit.
      char* end = nullptr;
      double v = std::strtod(f.c_str(), &end);
      if (end != f.c_str() + f.size())
        throw ParseError(line_no, "bad float '" + f + "'");
      if (!std::isfinite(v)) throw ParseError(line_no, "non-finite float");
      row[i] = static_cast<float>(v);
    }
    table.insert(std::move(fields[0]), row);
    ++rows;
  }
  if (rows != vocab)
    throw ParseError(line_no, "header declares " + std::to_string(vocab) +
                                  " rows, found " + std::to_string(rows));
  return table;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_embeddings(in);
}

std::vector<std::string> EmbeddingTable::words() const {
  std::vector<std::string> out;
  out.reserve(vectors_.size());
  for (const auto& [w, v] : vectors_) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

void write_embeddings(std::ostream& out, const EmbeddingTable& table) {
  const auto words = table.words();
  out << words.size() << ' ' << table.dim() << '\n';
  char buf[32];
  for (const auto& w : words) {
    out << w;
    const std::span<const float> row = *table.find(w);
    for (float v : row) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
}

SentenceVector sentence_vector(std::span<const std::string> tokens,
                               const EmbeddingTable& table) {
  SentenceVector sv;
  sv.values.assign(table.dim(), 0.0);
  for (const auto& tok : tokens) {
    auto v = table.find(tok);
    if (!v) continue;
    for (std::size_t i = 0; i < v->size(); ++i) sv.values[i] += (*v)[i];
    ++sv.known_token_count;
  }
  if (sv.known_token_count > 0) {
    const double inv = 1.0 / static_cast<double>(sv.known_token_count);
    for (double& x : sv.values) x *= inv;
  }
  return sv;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cosine: vector length mismatch");
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
}

}  // namespace tsctag
