#include "tsctag/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tsctag {

namespace {

// mt19937_64 is fully specified by the standard; the distributions below are
// written out so output does not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::vector<float> random_direction(Rng& rng, std::size_t dim) {
  std::vector<double> v(dim);
  double n2 = 0.0;
  for (double& x : v) {
    x = rng.normal();
    n2 += x * x;
  }
  const double inv = 1.0 / std::sqrt(n2);
  std::vector<float> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = static_cast<float>(v[i] * inv);
  return out;
}

// Zipf(1) over `n` ranks.
class ZipfSampler {
 public:
  explicit ZipfSampler(std::size_t n) : cdf_(n) {
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      acc += 1.0 / static_cast<double>(r + 1);
      cdf_[r] = acc;
    }
    for (double& c : cdf_) c /= acc;
  }

  std::size_t operator()(Rng& rng) const {
    const double u = rng.uniform();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

void validate(const SyntheticSpec& s) {
  if (s.videos == 0) throw std::invalid_argument("synthetic: videos must be >= 1");
  if (s.topics == 0) throw std::invalid_argument("synthetic: topics must be >= 1");
  if (s.comments_per_topic == 0)
    throw std::invalid_argument("synthetic: comments_per_topic must be >= 1");
  if (s.vocab_per_topic == 0) throw std::invalid_argument("synthetic: zero topic vocabulary");
  if (s.tokens_per_comment == 0)
    throw std::invalid_argument("synthetic: tokens_per_comment must be >= 1");
  if (s.dim == 0) throw std::invalid_argument("synthetic: dim must be >= 1");
  if (!(s.density > 0.0) || !std::isfinite(s.density))
    throw std::invalid_argument("synthetic: density must be positive");
  if (!(s.noise_fraction >= 0.0 && s.noise_fraction < 1.0))
    throw std::invalid_argument("synthetic: noise_fraction must lie in [0, 1)");
  if (s.noise_fraction > 0.0 && s.noise_vocab == 0)
    throw std::invalid_argument("synthetic: zero noise vocabulary");
  if (!(s.video_coherence >= 0.0 && s.video_coherence <= 1.0))
    throw std::invalid_argument("synthetic: video_coherence must lie in [0, 1]");
  if (!(s.topic_gap >= 0.0) || !std::isfinite(s.topic_gap))
    throw std::invalid_argument("synthetic: topic_gap must be finite and >= 0");
  if (!(s.word_spread >= 0.0)) throw std::invalid_argument("synthetic: word_spread < 0");
  if (s.reply_probability > 1.0)
    throw std::invalid_argument("synthetic: reply_probability > 1");
}

struct Draft {
  double t;
  std::size_t label;
  bool noise;
  std::vector<std::string> tokens;
};

}  // namespace

double default_reply_probability(double density) {
  return std::clamp(1.0 - density / 120.0, 0.0, 1.0);
}

SyntheticCorpus generate_corpus(const SyntheticSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  SyntheticCorpus corpus;
  corpus.embeddings = EmbeddingTable(spec.dim);

  const double reply_p = spec.reply_probability >= 0.0
                             ? spec.reply_probability
                             : default_reply_probability(spec.density);
  const double noise_scale = spec.word_spread / std::sqrt(static_cast<double>(spec.dim));

  std::vector<std::string> noise_words;
  for (std::size_t j = 0; j < spec.noise_vocab; ++j) {
    noise_words.push_back("noise" + std::to_string(j));
    corpus.embeddings.insert(noise_words.back(), random_direction(rng, spec.dim));
  }

  const ZipfSampler topic_zipf(spec.vocab_per_topic);
  const std::size_t planted = spec.topics * spec.comments_per_topic;
  const auto noise_count = static_cast<std::size_t>(std::llround(
      spec.noise_fraction * static_cast<double>(planted) / (1.0 - spec.noise_fraction)));
  const std::size_t total = planted + noise_count;
  const double slice = static_cast<double>(total) / spec.density * 60.0 /
                       static_cast<double>(spec.topics);
  const double stride = slice + spec.topic_gap;
  const double duration = stride * static_cast<double>(spec.topics) - spec.topic_gap;

  for (std::size_t v = 0; v < spec.videos; ++v) {
    SyntheticVideo video;
    video.video_id = "syn" + std::to_string(v);
    video.duration_seconds = duration;

    std::vector<std::vector<std::string>> topic_words(spec.topics);
    const std::vector<float> video_dir = random_direction(rng, spec.dim);
    for (std::size_t k = 0; k < spec.topics; ++k) {
      std::vector<float> dir = random_direction(rng, spec.dim);
      for (std::size_t d = 0; d < spec.dim; ++d)
        dir[d] = static_cast<float>(spec.video_coherence * video_dir[d] +
                                    (1.0 - spec.video_coherence) * dir[d]);
      for (std::size_t j = 0; j < spec.vocab_per_topic; ++j) {
        std::string word = "v" + std::to_string(v) + "t" + std::to_string(k) + "w" +
                           std::to_string(j);
        std::vector<float> vec(spec.dim);
        for (std::size_t d = 0; d < spec.dim; ++d)
          vec[d] = static_cast<float>(dir[d] + noise_scale * rng.normal());
        corpus.embeddings.insert(word, vec);
        topic_words[k].push_back(std::move(word));
      }
    }

    std::vector<Draft> drafts;
    drafts.reserve(total);
    for (std::size_t k = 0; k < spec.topics; ++k) {
      // Each topic occupies its own slice of the timeline.
      std::vector<double> times(spec.comments_per_topic);
      for (double& t : times) t = stride * static_cast<double>(k) + slice * rng.uniform();
      std::sort(times.begin(), times.end());

      std::vector<std::size_t> topic_drafts;
      for (double t : times) {
        Draft d{t, k, false, {}};
        const bool reply = !topic_drafts.empty() && rng.uniform() < reply_p;
        if (reply) {
          // Reply to one of the last few comments of this topic.
          const std::size_t window = std::min<std::size_t>(3, topic_drafts.size());
          const Draft& parent =
              drafts[topic_drafts[topic_drafts.size() - 1 - rng.below(window)]];
          const std::size_t keep = (spec.tokens_per_comment + 1) / 2;
          for (std::size_t i = 0; i < keep && i < parent.tokens.size(); ++i)
            d.tokens.push_back(parent.tokens[i]);
        }
        while (d.tokens.size() < spec.tokens_per_comment)
          d.tokens.push_back(topic_words[k][topic_zipf(rng)]);
        topic_drafts.push_back(drafts.size());
        drafts.push_back(std::move(d));
      }
    }
    for (std::size_t i = 0; i < noise_count; ++i) {
      Draft d{duration * rng.uniform(), spec.topics + i, true, {}};
      for (std::size_t j = 0; j < spec.tokens_per_comment; ++j)
        d.tokens.push_back(noise_words[rng.below(noise_words.size())]);
      drafts.push_back(std::move(d));
    }

    std::stable_sort(drafts.begin(), drafts.end(),
                     [](const Draft& a, const Draft& b) { return a.t < b.t; });
    for (auto& d : drafts) {
      RawComment raw;
      raw.video_id = video.video_id;
      raw.t = d.t;
      raw.text = join(d.tokens);
      video.comments.push_back(std::move(raw));
      video.planted_labels.push_back(d.label);
      video.is_noise.push_back(d.noise);
    }

    // Planted tags: the most frequent words of each topic, topics in order.
    for (std::size_t k = 0; k < spec.topics; ++k)
      for (std::size_t j = 0; j < std::min(spec.tags_per_topic, spec.vocab_per_topic); ++j)
        video.planted_tags.push_back(topic_words[k][j]);

    corpus.videos.push_back(std::move(video));
  }
  return corpus;
}

}  // namespace tsctag
