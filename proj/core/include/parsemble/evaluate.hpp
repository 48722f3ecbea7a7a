#pragma once

#include <utility>
#include <vector>

#include "parsemble/constituent.hpp"
#include "parsemble/treebank.hpp"

namespace parsemble {

// PARSEVAL counts with the derived percentages.  Precision is vacuously 100
// when nothing is hypothesized, recall likewise when gold is empty.
struct Metrics {
  long matched = 0;
  long hypothesized = 0;
  long gold_count = 0;
  double precision = 0.0;  // percent
  double recall = 0.0;
  double mean_pr = 0.0;    // (P+R)/2
  double f_measure = 0.0;  // 2PR/(P+R)
};

Metrics metrics_from_counts(long matched, long hypothesized, long gold_count);

// Harmonic mean of two percentages; 0 when both are 0.
double f_measure(double p, double r);

Metrics score_sentence(const ConstituentSet& hyp, const ConstituentSet& gold);

// Micro-average: counts are summed over sentences before the ratios.
Metrics score_corpus(
    const std::vector<std::pair<ConstituentSet, ConstituentSet>>& pairs);

struct OracleResult {
  Metrics metrics;
  std::vector<int> chosen;  // 1-based parser index per sentence
};

// Omniscient per-sentence selection: highest sentence F, ties broken by
// higher recall then lowest index.
OracleResult switching_oracle(const std::vector<SentenceBundle>& bundles);

// Per sentence the hypothesis is (union of candidates) intersected with
// gold, so precision is 100 by construction and recall measures how much of
// gold the union covers.
Metrics max_precision_oracle(const std::vector<SentenceBundle>& bundles);

enum class SignificanceMode { Precision, Recall };

struct SignificanceResult {
  long n_disagreements = 0;
  long n_favoring_a = 0;
  double p_value = 1.0;
  bool significant = false;
};

// Exact two-sided binomial sign test on discordant constituents.
//   Recall mode: gold constituents recovered by exactly one system,
//   favoring the system that recovered them.
//   Precision mode: incorrect constituents hypothesized by exactly one
//   system, favoring the system that avoided the error.
// Zero disagreements is not an error: p = 1.0.
SignificanceResult significance_test(const std::vector<ConstituentSet>& hyp_a,
                                     const std::vector<ConstituentSet>& hyp_b,
                                     const std::vector<ConstituentSet>& gold,
                                     SignificanceMode mode,
                                     double alpha = 0.01);

}  // namespace parsemble
