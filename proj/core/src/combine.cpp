#include "parsemble/combine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "parsemble/errors.hpp"

namespace parsemble {

namespace {

void check_k(const SentenceBundle& bundle, int k, const char* who) {
  if (bundle.k() != k)
    throw Error(ErrorCode::ModelKMismatch,
                std::string(who) + ": expected k=" + std::to_string(k) +
                    ", bundle has k=" + std::to_string(bundle.k()));
}

// log(1 / (1 + exp(-x))), stable for large |x|.
double log_sigmoid(double x) {
  return x < 0.0 ? x - std::log1p(std::exp(x)) : -std::log1p(std::exp(-x));
}

std::size_t intersection_size(const std::set<Constituent>& a,
                              const std::set<Constituent>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Posterior log-odds of inclusion given the membership bits.  Each parser
// contributes one likelihood-ratio difference; accumulating those differences
// in extended precision makes exactly opposing evidence cancel to zero, so a
// perfectly balanced vote sits at posterior 0.5 instead of drifting off it.
double posterior_log_odds(const NaiveBayesModel& model,
                          const MembershipVector& m) {
  long double x = static_cast<long double>(std::log(model.prior_true)) -
                  static_cast<long double>(std::log1p(-model.prior_true));
  for (int i = 0; i < model.k; ++i) {
    const double lr_t = m[i] ? std::log(model.cond_true[i])
                             : std::log1p(-model.cond_true[i]);
    const double lr_f = m[i] ? std::log(model.cond_false[i])
                             : std::log1p(-model.cond_false[i]);
    x += static_cast<long double>(lr_t) - static_cast<long double>(lr_f);
  }
  return static_cast<double>(x);
}

}  // namespace

int majority_threshold(int k) { return k / 2 + 1; }

std::map<Constituent, MembershipVector> candidate_union(
    const SentenceBundle& bundle) {
  std::map<Constituent, MembershipVector> out;
  const int k = bundle.k();
  for (int i = 0; i < k; ++i) {
    for (const Constituent& c : bundle.candidates[i].items) {
      auto [it, inserted] = out.try_emplace(c, MembershipVector(k, false));
      it->second[i] = true;
    }
  }
  return out;
}

ConstituentSet constituent_voting(const SentenceBundle& bundle,
                                  const VoteConfig& cfg) {
  const int k = bundle.k();
  if (k < 2)
    throw Error(ErrorCode::InvalidConfig, "voting needs at least 2 parsers");
  if (cfg.threshold < 1 || cfg.threshold > k)
    throw Error(ErrorCode::InvalidConfig,
                "threshold " + std::to_string(cfg.threshold) +
                    " outside [1, " + std::to_string(k) + "]");
  ConstituentSet out;
  out.n_tokens = bundle.n_tokens();
  for (const auto& [c, m] : candidate_union(bundle)) {
    const auto votes = std::count(m.begin(), m.end(), true);
    if (votes >= cfg.threshold) out.items.insert(c);
  }
  return out;
}

NBCounts accumulate_counts(const std::vector<SentenceBundle>& dev) {
  if (dev.empty())
    throw Error(ErrorCode::EmptyTrainingSet, "no training sentences");
  const int k = dev.front().k();
  NBCounts counts;
  counts.joint_true.assign(k, 0);
  counts.joint_false.assign(k, 0);
  for (std::size_t s = 0; s < dev.size(); ++s) {
    const SentenceBundle& b = dev[s];
    if (!b.gold)
      throw Error(ErrorCode::MissingGold,
                  "training sentence " + std::to_string(s + 1) +
                      " has no gold parse");
    check_k(b, k, "train");
    for (const auto& [c, m] : candidate_union(b)) {
      const bool correct = b.gold->items.count(c) > 0;
      ++counts.n_candidates;
      if (correct) ++counts.n_true;
      for (int i = 0; i < k; ++i)
        if (m[i]) ++(correct ? counts.joint_true : counts.joint_false)[i];
    }
  }
  if (counts.n_candidates == 0)
    throw Error(ErrorCode::EmptyTrainingSet, "no candidate constituents");
  return counts;
}

NaiveBayesModel model_from_counts(const NBCounts& counts, double alpha,
                                  const NormalizationConfig& cfg) {
  if (!(alpha > 0.0))
    throw Error(ErrorCode::InvalidConfig, "smoothing alpha must be positive");
  const int k = static_cast<int>(counts.joint_true.size());
  NaiveBayesModel model;
  model.k = k;
  model.smoothing_alpha = alpha;
  model.counts = counts;
  model.normalization = cfg;
  model.prior_true =
      (counts.n_true + alpha) / (counts.n_candidates + 2.0 * alpha);
  model.cond_true.resize(k);
  model.cond_false.resize(k);
  const long n_false = counts.n_candidates - counts.n_true;
  for (int i = 0; i < k; ++i) {
    model.cond_true[i] =
        (counts.joint_true[i] + alpha) / (counts.n_true + 2.0 * alpha);
    model.cond_false[i] =
        (counts.joint_false[i] + alpha) / (n_false + 2.0 * alpha);
  }
  return model;
}

NaiveBayesModel train_naive_bayes(const std::vector<SentenceBundle>& dev,
                                  double alpha,
                                  const NormalizationConfig& cfg) {
  return model_from_counts(accumulate_counts(dev), alpha, cfg);
}

double nb_posterior(const NaiveBayesModel& model, const MembershipVector& m) {
  if (static_cast<int>(m.size()) != model.k)
    throw Error(ErrorCode::LengthMismatch,
                "membership vector has " + std::to_string(m.size()) +
                    " bits, model has k=" + std::to_string(model.k));
  // sigmoid(log-odds) without leaving the log domain.
  return 1.0 / (1.0 + std::exp(-posterior_log_odds(model, m)));
}

ConstituentSet nb_hybridize(const NaiveBayesModel& model,
                            const SentenceBundle& bundle) {
  check_k(bundle, model.k, "nb_hybridize");
  ConstituentSet out;
  out.n_tokens = bundle.n_tokens();
  for (const auto& [c, m] : candidate_union(bundle))
    if (nb_posterior(model, m) > 0.5) out.items.insert(c);
  return out;
}

int similarity_switch(const SentenceBundle& bundle) {
  const int k = bundle.k();
  if (k < 2)
    throw Error(ErrorCode::InvalidConfig, "switching needs at least 2 parsers");
  std::vector<long> score(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const long shared = static_cast<long>(intersection_size(
          bundle.candidates[i].items, bundle.candidates[j].items));
      score[i] += shared;
      score[j] += shared;
    }
  int best = 0;
  for (int i = 1; i < k; ++i)
    if (score[i] > score[best]) best = i;
  return best + 1;
}

int bayes_switch(const NaiveBayesModel& model, const SentenceBundle& bundle) {
  check_k(bundle, model.k, "bayes_switch");
  const int k = bundle.k();
  if (k < 2)
    throw Error(ErrorCode::InvalidConfig, "switching needs at least 2 parsers");
  // Each parse is scored as the decisions it made on every candidate in the
  // union: log P(in) when it includes the constituent, log P(out) otherwise.
  std::vector<double> score(k, 0.0);
  for (const auto& [c, m] : candidate_union(bundle)) {
    const double x = posterior_log_odds(model, m);
    const double log_in = log_sigmoid(x);
    const double log_out = log_sigmoid(-x);
    for (int i = 0; i < k; ++i) score[i] += m[i] ? log_in : log_out;
  }
  int best = 0;
  for (int i = 1; i < k; ++i)
    if (score[i] > score[best]) best = i;
  return best + 1;
}

namespace {

using nlohmann::ordered_json;

ordered_json normalization_to_json(const NormalizationConfig& cfg) {
  return ordered_json{
      {"strip_function_tags", cfg.strip_function_tags},
      {"remove_none_nodes", cfg.remove_none_nodes},
      {"drop_root_labels",
       std::vector<std::string>(cfg.drop_root_labels.begin(),
                                cfg.drop_root_labels.end())},
      {"exclude_preterminals", cfg.exclude_preterminals},
      {"ignore_pos", std::vector<std::string>(cfg.ignore_pos.begin(),
                                              cfg.ignore_pos.end())},
  };
}

NormalizationConfig normalization_from_json(const nlohmann::json& j) {
  NormalizationConfig cfg;
  cfg.strip_function_tags = j.at("strip_function_tags").get<bool>();
  cfg.remove_none_nodes = j.at("remove_none_nodes").get<bool>();
  cfg.exclude_preterminals = j.at("exclude_preterminals").get<bool>();
  cfg.drop_root_labels.clear();
  for (const auto& s : j.at("drop_root_labels"))
    cfg.drop_root_labels.insert(s.get<std::string>());
  cfg.ignore_pos.clear();
  for (const auto& s : j.at("ignore_pos"))
    cfg.ignore_pos.insert(s.get<std::string>());
  return cfg;
}

}  // namespace

std::string model_to_json(const NaiveBayesModel& model) {
  ordered_json j{
      {"k", model.k},
      {"alpha", model.smoothing_alpha},
      {"prior_true", model.prior_true},
      {"cond_true", model.cond_true},
      {"cond_false", model.cond_false},
      {"counts",
       ordered_json{{"n_candidates", model.counts.n_candidates},
                    {"n_true", model.counts.n_true},
                    {"joint_true", model.counts.joint_true},
                    {"joint_false", model.counts.joint_false}}},
      {"normalization_config", normalization_to_json(model.normalization)},
  };
  return j.dump(2) + "\n";
}

NaiveBayesModel model_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    NaiveBayesModel model;
    model.k = j.at("k").get<int>();
    model.smoothing_alpha = j.at("alpha").get<double>();
    model.prior_true = j.at("prior_true").get<double>();
    model.cond_true = j.at("cond_true").get<std::vector<double>>();
    model.cond_false = j.at("cond_false").get<std::vector<double>>();
    const auto& counts = j.at("counts");
    model.counts.n_candidates = counts.at("n_candidates").get<long>();
    model.counts.n_true = counts.at("n_true").get<long>();
    model.counts.joint_true =
        counts.at("joint_true").get<std::vector<long>>();
    model.counts.joint_false =
        counts.at("joint_false").get<std::vector<long>>();
    model.normalization = normalization_from_json(j.at("normalization_config"));

    if (model.k < 1 ||
        static_cast<int>(model.cond_true.size()) != model.k ||
        static_cast<int>(model.cond_false.size()) != model.k ||
        static_cast<int>(model.counts.joint_true.size()) != model.k ||
        static_cast<int>(model.counts.joint_false.size()) != model.k)
      throw Error(ErrorCode::ModelFormat, "inconsistent k and array lengths");
    for (int i = 0; i < model.k; ++i)
      if (!(model.cond_true[i] > 0.0 && model.cond_true[i] < 1.0 &&
            model.cond_false[i] > 0.0 && model.cond_false[i] < 1.0))
        throw Error(ErrorCode::ModelFormat,
                    "conditional probabilities must lie in (0, 1)");
    if (!(model.prior_true > 0.0 && model.prior_true < 1.0))
      throw Error(ErrorCode::ModelFormat, "prior must lie in (0, 1)");
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ModelFormat, e.what());
  }
}

void save_model(const NaiveBayesModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << model_to_json(model);
}

NaiveBayesModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

}  // namespace parsemble
