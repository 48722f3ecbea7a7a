#include "parsemble/evaluate.hpp"

#include <algorithm>

#include <boost/math/distributions/binomial.hpp>

#include "parsemble/combine.hpp"
#include "parsemble/errors.hpp"

namespace parsemble {

namespace {

long matched_count(const ConstituentSet& hyp, const ConstituentSet& gold) {
  long n = 0;
  for (const Constituent& c : hyp.items)
    if (gold.items.count(c)) ++n;
  return n;
}

}  // namespace

Metrics metrics_from_counts(long matched, long hypothesized, long gold_count) {
  Metrics m;
  m.matched = matched;
  m.hypothesized = hypothesized;
  m.gold_count = gold_count;
  m.precision = hypothesized == 0 ? 100.0 : 100.0 * matched / hypothesized;
  m.recall = gold_count == 0 ? 100.0 : 100.0 * matched / gold_count;
  m.mean_pr = (m.precision + m.recall) / 2.0;
  m.f_measure = f_measure(m.precision, m.recall);
  return m;
}

double f_measure(double p, double r) {
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

Metrics score_sentence(const ConstituentSet& hyp, const ConstituentSet& gold) {
  if (hyp.n_tokens != gold.n_tokens)
    throw Error(ErrorCode::TokenCountMismatch,
                "hypothesis has " + std::to_string(hyp.n_tokens) +
                    " tokens, gold has " + std::to_string(gold.n_tokens));
  return metrics_from_counts(matched_count(hyp, gold),
                             static_cast<long>(hyp.items.size()),
                             static_cast<long>(gold.items.size()));
}

Metrics score_corpus(
    const std::vector<std::pair<ConstituentSet, ConstituentSet>>& pairs) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyCorpus, "no sentences");
  long matched = 0, hypothesized = 0, gold_count = 0;
  for (const auto& [hyp, gold] : pairs) {
    const Metrics m = score_sentence(hyp, gold);
    matched += m.matched;
    hypothesized += m.hypothesized;
    gold_count += m.gold_count;
  }
  return metrics_from_counts(matched, hypothesized, gold_count);
}

namespace {

// Exact comparison of sentence-level F = 2m/(h+g) as rationals, so ties are
// real ties and the recall/index rules engage deterministically.  Returns
// <0, 0, >0 like a three-way compare; gold count g is shared.
int compare_f(long m_a, long h_a, long m_b, long h_b, long g) {
  const long den_a = h_a + g;
  const long den_b = h_b + g;
  if (den_a == 0 && den_b == 0) return 0;          // both vacuous, F = 100
  if (den_a == 0) return 2 * m_b == den_b ? 0 : 1;  // F_a = 100 >= F_b
  if (den_b == 0) return 2 * m_a == den_a ? 0 : -1;
  const long lhs = m_a * den_b;
  const long rhs = m_b * den_a;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

}  // namespace

OracleResult switching_oracle(const std::vector<SentenceBundle>& bundles) {
  if (bundles.empty()) throw Error(ErrorCode::EmptyCorpus, "no sentences");
  OracleResult result;
  long matched = 0, hypothesized = 0, gold_count = 0;
  for (std::size_t s = 0; s < bundles.size(); ++s) {
    const SentenceBundle& b = bundles[s];
    if (!b.gold)
      throw Error(ErrorCode::MissingGold,
                  "sentence " + std::to_string(s + 1) + " has no gold parse");
    const long g = static_cast<long>(b.gold->items.size());
    int best = 0;
    Metrics best_m;
    for (int i = 0; i < b.k(); ++i) {
      const Metrics m = score_sentence(b.candidates[i], *b.gold);
      if (i == 0) {
        best_m = m;
        continue;
      }
      const int cmp =
          compare_f(m.matched, m.hypothesized, best_m.matched,
                    best_m.hypothesized, g);
      // Recall ties reduce to matched counts because g is shared.
      if (cmp > 0 || (cmp == 0 && m.matched > best_m.matched)) {
        best = i;
        best_m = m;
      }
    }
    result.chosen.push_back(best + 1);
    matched += best_m.matched;
    hypothesized += best_m.hypothesized;
    gold_count += best_m.gold_count;
  }
  result.metrics = metrics_from_counts(matched, hypothesized, gold_count);
  return result;
}

Metrics max_precision_oracle(const std::vector<SentenceBundle>& bundles) {
  if (bundles.empty()) throw Error(ErrorCode::EmptyCorpus, "no sentences");
  long matched = 0, gold_count = 0;
  for (std::size_t s = 0; s < bundles.size(); ++s) {
    const SentenceBundle& b = bundles[s];
    if (!b.gold)
      throw Error(ErrorCode::MissingGold,
                  "sentence " + std::to_string(s + 1) + " has no gold parse");
    for (const auto& [c, m] : candidate_union(b))
      if (b.gold->items.count(c)) ++matched;
    gold_count += static_cast<long>(b.gold->items.size());
  }
  // Hypothesis is union-intersect-gold, so hypothesized == matched.
  return metrics_from_counts(matched, matched, gold_count);
}

SignificanceResult significance_test(const std::vector<ConstituentSet>& hyp_a,
                                     const std::vector<ConstituentSet>& hyp_b,
                                     const std::vector<ConstituentSet>& gold,
                                     SignificanceMode mode, double alpha) {
  if (hyp_a.size() != hyp_b.size() || hyp_a.size() != gold.size())
    throw Error(ErrorCode::AlignmentMismatch,
                "system and gold corpora differ in sentence count");

  SignificanceResult r;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const auto& a = hyp_a[s].items;
    const auto& b = hyp_b[s].items;
    const auto& g = gold[s].items;
    if (hyp_a[s].n_tokens != gold[s].n_tokens ||
        hyp_b[s].n_tokens != gold[s].n_tokens)
      throw Error(ErrorCode::AlignmentMismatch,
                  "sentence " + std::to_string(s + 1) +
                      ": token counts differ across systems");
    if (mode == SignificanceMode::Recall) {
      // Trials: gold constituents recovered by exactly one system.
      for (const Constituent& c : g) {
        const bool in_a = a.count(c) > 0, in_b = b.count(c) > 0;
        if (in_a == in_b) continue;
        ++r.n_disagreements;
        if (in_a) ++r.n_favoring_a;
      }
    } else {
      // Trials: incorrect constituents asserted by exactly one system; the
      // system that avoided the error wins the trial.
      auto scan = [&](const std::set<Constituent>& own,
                      const std::set<Constituent>& other, bool own_is_a) {
        for (const Constituent& c : own) {
          if (g.count(c) || other.count(c)) continue;
          ++r.n_disagreements;
          if (!own_is_a) ++r.n_favoring_a;
        }
      };
      scan(a, b, true);
      scan(b, a, false);
    }
  }

  if (r.n_disagreements == 0) {
    r.p_value = 1.0;
    r.significant = false;
    return r;
  }
  const boost::math::binomial_distribution<double> dist(
      static_cast<double>(r.n_disagreements), 0.5);
  const double lower = boost::math::cdf(dist, r.n_favoring_a);
  const double upper =
      r.n_favoring_a == 0
          ? 1.0
          : boost::math::cdf(boost::math::complement(dist, r.n_favoring_a - 1));
  r.p_value = std::min(1.0, 2.0 * std::min(lower, upper));
  r.significant = r.p_value < alpha;
  return r;
}

}  // namespace parsemble
