#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "parsemble/analyze.hpp"
#include "parsemble/combine.hpp"
#include "parsemble/evaluate.hpp"
#include "parsemble/treebank.hpp"

namespace {

using namespace parsemble;

const std::string kSentence =
    "(S (NP (DT the) (JJ quick) (NN fox)) (VP (VB jumps) (PP (IN over) "
    "(NP (DT the) (JJ lazy) (NN dog)))) (. .))";

std::vector<SentenceBundle> corpus() {
  static const std::vector<SentenceBundle> bundles = [] {
    SyntheticConfig cfg;
    cfg.n_sentences = 200;
    cfg.min_len = 10;
    cfg.max_len = 30;
    cfg.k = 3;
    cfg.miss_rate = 0.1;
    cfg.spurious_rate = 0.1;
    cfg.seed = 4711;
    return generate_synthetic(cfg);
  }();
  return bundles;
}

NaiveBayesModel model() {
  static const NaiveBayesModel m = train_naive_bayes(corpus(), 1.0, {});
  return m;
}

void BM_ParseBracketed(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_bracketed(kSentence));
}
BENCHMARK(BM_ParseBracketed);

void BM_RenderBracketed(benchmark::State& state) {
  const Tree t = parse_bracketed(kSentence);
  for (auto _ : state) benchmark::DoNotOptimize(render_bracketed(t));
}
BENCHMARK(BM_RenderBracketed);

void BM_ExtractConstituents(benchmark::State& state) {
  const Tree t = parse_bracketed(kSentence);
  for (auto _ : state)
    benchmark::DoNotOptimize(extract_constituents(t, {}));
}
BENCHMARK(BM_ExtractConstituents);

void BM_ConstituentVoting(benchmark::State& state) {
  const auto bundles = corpus();
  std::size_t i = 0;
  for (auto _ : state) {
    const SentenceBundle& b = bundles[i++ % bundles.size()];
    benchmark::DoNotOptimize(constituent_voting(b, {2}));
  }
}
BENCHMARK(BM_ConstituentVoting);

void BM_NbHybridize(benchmark::State& state) {
  const auto bundles = corpus();
  const NaiveBayesModel m = model();
  std::size_t i = 0;
  for (auto _ : state) {
    const SentenceBundle& b = bundles[i++ % bundles.size()];
    benchmark::DoNotOptimize(nb_hybridize(m, b));
  }
}
BENCHMARK(BM_NbHybridize);

void BM_BayesSwitch(benchmark::State& state) {
  const auto bundles = corpus();
  const NaiveBayesModel m = model();
  std::size_t i = 0;
  for (auto _ : state) {
    const SentenceBundle& b = bundles[i++ % bundles.size()];
    benchmark::DoNotOptimize(bayes_switch(m, b));
  }
}
BENCHMARK(BM_BayesSwitch);

void BM_BuildTree(benchmark::State& state) {
  const Tree ref = parse_bracketed(kSentence);
  const ConstituentSet set = extract_constituents(ref, {});
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(set, ref));
}
BENCHMARK(BM_BuildTree);

void BM_ScoreCorpus(benchmark::State& state) {
  const auto bundles = corpus();
  std::vector<std::pair<ConstituentSet, ConstituentSet>> pairs;
  for (const auto& b : bundles) pairs.emplace_back(b.candidates[0], *b.gold);
  for (auto _ : state) benchmark::DoNotOptimize(score_corpus(pairs));
}
BENCHMARK(BM_ScoreCorpus);

}  // namespace

BENCHMARK_MAIN();
