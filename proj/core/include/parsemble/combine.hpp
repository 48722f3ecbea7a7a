#pragma once

#include <map>
#include <string>
#include <vector>

#include "parsemble/constituent.hpp"
#include "parsemble/treebank.hpp"

namespace parsemble {

// bits[i] is true iff parser i proposed the constituent.
using MembershipVector = std::vector<bool>;

struct VoteConfig {
  int threshold = 0;  // minimum vote count for inclusion
};

// Smallest majority: floor(k/2) + 1.  Thresholds at or above this value
// guarantee crossing-free voting output.
int majority_threshold(int k);

// Raw counts over a development set, kept alongside the model so it can be
// re-smoothed without retraining.
struct NBCounts {
  long n_candidates = 0;          // |C| summed over sentences
  long n_true = 0;                // candidates present in gold
  std::vector<long> joint_true;   // per parser: proposed and in gold
  std::vector<long> joint_false;  // per parser: proposed and not in gold

  bool operator==(const NBCounts&) const = default;
};

struct NaiveBayesModel {
  int k = 0;
  double smoothing_alpha = 1.0;
  double prior_true = 0.5;
  std::vector<double> cond_true;   // P(parser i proposes | in parse)
  std::vector<double> cond_false;  // P(parser i proposes | not in parse)
  NBCounts counts;
  NormalizationConfig normalization;
};

// Union of the k candidate sets with per-candidate membership bits,
// ordered deterministically.
std::map<Constituent, MembershipVector> candidate_union(
    const SentenceBundle& bundle);

// Keeps exactly the candidates whose vote count reaches cfg.threshold.
ConstituentSet constituent_voting(const SentenceBundle& bundle,
                                  const VoteConfig& cfg);

NBCounts accumulate_counts(const std::vector<SentenceBundle>& dev);

// Add-alpha smoothing over the counts; alpha must be positive so that all
// probabilities land strictly inside (0, 1).
NaiveBayesModel model_from_counts(const NBCounts& counts, double alpha,
                                  const NormalizationConfig& cfg);

NaiveBayesModel train_naive_bayes(const std::vector<SentenceBundle>& dev,
                                  double alpha = 1.0,
                                  const NormalizationConfig& cfg = {});

// P(in parse | membership bits), computed in the log domain with exact
// renormalization.
double nb_posterior(const NaiveBayesModel& model, const MembershipVector& m);

// Candidates with posterior strictly above 0.5.
ConstituentSet nb_hybridize(const NaiveBayesModel& model,
                            const SentenceBundle& bundle);

// Parser whose constituent set has the highest summed intersection with the
// other parsers' sets.  Returns a 1-based parser index; ties resolve to the
// lowest index.
int similarity_switch(const SentenceBundle& bundle);

// Parser whose inclusion/exclusion decisions over the candidate union are
// most probable under the model; log-domain scoring.  1-based, lowest index
// on ties.
int bayes_switch(const NaiveBayesModel& model, const SentenceBundle& bundle);

// JSON persistence; counts and normalization config are stored with the
// smoothed probabilities.
void save_model(const NaiveBayesModel& model, const std::string& path);
NaiveBayesModel load_model(const std::string& path);
std::string model_to_json(const NaiveBayesModel& model);
NaiveBayesModel model_from_json(const std::string& text);

}  // namespace parsemble
