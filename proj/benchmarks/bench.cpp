#include <benchmark/benchmark.h>

#include <random>

#include "tsctag/cluster_dialogue.hpp"
#include "tsctag/cluster_topic.hpp"
#include "tsctag/influence.hpp"
#include "tsctag/pipeline.hpp"
#include "tsctag/synthetic.hpp"

namespace {

using namespace tsctag;

// One synthetic video of about n comments at the given density.
PreparedVideo video(std::size_t n, double density) {
  SyntheticSpec spec;
  spec.topics = std::max<std::size_t>(1, n / 20);
  spec.comments_per_topic = 20;
  spec.density = density;
  spec.noise_fraction = 0.1;
  spec.seed = n;
  const SyntheticCorpus c = generate_corpus(spec);
  const auto& v = c.videos[0];
  return prepare_video({v.video_id, v.comments}, {}, c.embeddings);
}

void BM_BuildSag(benchmark::State& state) {
  const PreparedVideo v = video(state.range(0), static_cast<double>(state.range(1)));
  std::size_t edges = 0;
  for (auto _ : state) {
    const Sag g = build_sag(v.times, v.vectors, SagOptions{});
    edges = g.edge_count();
    benchmark::DoNotOptimize(edges);
  }
  state.counters["edges"] = static_cast<double>(edges);
}
BENCHMARK(BM_BuildSag)->ArgsProduct({{1000, 4000}, {30, 150}})->Unit(benchmark::kMillisecond);

void BM_Dialogue(benchmark::State& state) {
  const PreparedVideo v = video(state.range(0), 150.0);
  const Sag g = build_sag(v.times, v.vectors, SagOptions{kDialogueGamma, kDefaultEdgeCutoff});
  for (auto _ : state) benchmark::DoNotOptimize(cluster_dialogue(g, kDefaultRhoD));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_Dialogue)->RangeMultiplier(2)->Range(1000, 8000)->Unit(benchmark::kMillisecond);

void BM_TopicCenter(benchmark::State& state) {
  const PreparedVideo v = video(state.range(0), 150.0);
  TopicClusterOptions opt;
  opt.greedy_rejection = state.range(1) != 0;
  std::size_t pushes = 0;
  for (auto _ : state) {
    const auto r = cluster_topic(v.times, v.vectors, opt);
    pushes = r.queue_pushes;
    benchmark::DoNotOptimize(pushes);
  }
  state.counters["pushes"] = static_cast<double>(pushes);
}
BENCHMARK(BM_TopicCenter)
    ->ArgsProduct({{1000, 2000, 4000}, {0, 1}})
    ->ArgNames({"n", "rejection"})
    ->Unit(benchmark::kMillisecond);

void BM_Influence(benchmark::State& state) {
  const PreparedVideo v = video(state.range(0), 150.0);
  const Clustering c = cluster_video(v, ClustererKind::dialogue, PipelineConfig{});
  const InfluenceMatrix m = influence_matrix(c.graph, c.partition);
  for (auto _ : state) benchmark::DoNotOptimize(iterate_influence(m, kDefaultTurns, 0.0));
  state.counters["nonzeros"] = static_cast<double>(m.nonzeros());
}
BENCHMARK(BM_Influence)->RangeMultiplier(2)->Range(1000, 8000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
