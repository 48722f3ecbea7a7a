// Command-line front end: train a combination model, combine parser outputs,
// score them, run oracle upper bounds, produce diagnostic reports, and
// generate synthetic ensembles for experimentation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parsemble/analyze.hpp"
#include "parsemble/combine.hpp"
#include "parsemble/errors.hpp"
#include "parsemble/evaluate.hpp"
#include "parsemble/treebank.hpp"

namespace {

using namespace parsemble;

struct NormFlags {
  bool keep_function_tags = false;
  bool keep_traces = false;
  bool keep_preterminals = false;
  bool keep_root = false;
  std::vector<std::string> ignore_pos;
  std::vector<CLI::Option*> opts;

  bool any_set() const {
    for (const CLI::Option* o : opts)
      if (o->count() > 0) return true;
    return false;
  }

  NormalizationConfig to_config() const {
    NormalizationConfig cfg;
    cfg.strip_function_tags = !keep_function_tags;
    cfg.remove_none_nodes = !keep_traces;
    cfg.exclude_preterminals = !keep_preterminals;
    if (keep_root) cfg.drop_root_labels.clear();
    cfg.ignore_pos.insert(ignore_pos.begin(), ignore_pos.end());
    return cfg;
  }
};

void add_norm_flags(CLI::App* cmd, NormFlags& nf) {
  nf.opts.push_back(cmd->add_flag("--keep-function-tags",
                                  nf.keep_function_tags,
                                  "Keep label suffixes such as -SBJ or =2"));
  nf.opts.push_back(
      cmd->add_flag("--keep-traces", nf.keep_traces,
                    "Keep -NONE- trace subtrees instead of pruning them"));
  nf.opts.push_back(cmd->add_flag(
      "--keep-preterminals", nf.keep_preterminals,
      "Treat part-of-speech nodes as scorable constituents"));
  nf.opts.push_back(cmd->add_flag(
      "--keep-root", nf.keep_root, "Keep TOP/ROOT/S1 wrapper constituents"));
  nf.opts.push_back(cmd->add_option(
      "--ignore-pos", nf.ignore_pos,
      "Drop tokens whose POS tag matches (repeatable, e.g. punctuation)"));
}

ReadOptions read_options(bool allow_mismatch) {
  ReadOptions opts;
  opts.allow_token_mismatch = allow_mismatch;
  return opts;
}

// Raw nonblank lines of a tree file, aligned with read_tree_file order, so
// switching output can be emitted byte-identically.
std::vector<std::string> raw_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  auto out = open_output(path);
  out << text;
}

std::string metrics_row(const std::string& name, const Metrics& m) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-18s %8.2f %8.2f %8.2f %8.2f", name.c_str(),
                m.precision, m.recall, m.mean_pr, m.f_measure);
  return buf;
}

std::string metrics_header() {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-18s %8s %8s %8s %8s", "system", "P", "R",
                "(P+R)/2", "F");
  return buf;
}

nlohmann::ordered_json metrics_json(const Metrics& m) {
  return {{"matched", m.matched},
          {"hypothesized", m.hypothesized},
          {"gold", m.gold_count},
          {"precision", m.precision},
          {"recall", m.recall},
          {"mean_pr", m.mean_pr},
          {"f_measure", m.f_measure}};
}

Metrics corpus_metrics(const std::vector<SentenceBundle>& bundles, int parser) {
  std::vector<std::pair<ConstituentSet, ConstituentSet>> pairs;
  pairs.reserve(bundles.size());
  for (const SentenceBundle& b : bundles) {
    if (!b.gold) throw Error(ErrorCode::MissingGold, "gold parse missing");
    pairs.emplace_back(b.candidates[parser], *b.gold);
  }
  return score_corpus(pairs);
}

// --- train ------------------------------------------------------------

struct TrainArgs {
  std::vector<std::string> parser_files;
  std::string gold_file;
  std::string output = "model.json";
  double alpha = 1.0;
  bool allow_mismatch = false;
  NormFlags norm;
};

int cmd_train(const TrainArgs& a) {
  if (a.parser_files.size() < 2)
    throw Error(ErrorCode::Usage, "train needs at least two parser files");
  const NormalizationConfig cfg = a.norm.to_config();
  auto bundles = read_corpus(a.parser_files, a.gold_file, cfg,
                             read_options(a.allow_mismatch));
  NaiveBayesModel model = train_naive_bayes(bundles, a.alpha, cfg);
  save_model(model, a.output);

  std::cout << "sentences        " << bundles.size() << "\n";
  std::cout << "candidates       " << model.counts.n_candidates << "\n";
  std::cout << "gold-true        " << model.counts.n_true << "\n";
  for (int i = 0; i < model.k; ++i)
    std::cout << "parser " << (i + 1) << "         joint_true "
              << model.counts.joint_true[i] << "  joint_false "
              << model.counts.joint_false[i] << "\n";
  std::cout << "model written to " << a.output << "\n";
  return 0;
}

// --- combine ----------------------------------------------------------

struct CombineArgs {
  std::vector<std::string> parser_files;
  std::string method = "vote";
  std::optional<int> threshold;
  std::string model_file;
  int reference = 1;
  std::string format = "trees";
  std::string output;
  std::string indices_file;
  bool allow_mismatch = false;
  NormFlags norm;
};

void emit_tuples(std::ostream& out, const ConstituentSet& set) {
  for (const Constituent& c : set.items)
    out << "(" << c.label << "," << c.start << "," << c.end << ")\n";
  out << "\n";
}

int cmd_combine(const CombineArgs& a) {
  if (a.parser_files.size() < 2)
    throw Error(ErrorCode::Usage, "combine needs at least two parser files");
  const bool needs_model = a.method == "nb" || a.method == "bayes-switch";
  const bool switching = a.method == "sim-switch" || a.method == "bayes-switch";
  if (needs_model && a.model_file.empty())
    throw Error(ErrorCode::Usage, "--method " + a.method + " requires --model");
  if (!needs_model && !a.model_file.empty())
    throw Error(ErrorCode::Usage, "--model is only used by nb and bayes-switch");

  std::optional<NaiveBayesModel> model;
  if (needs_model) {
    model = load_model(a.model_file);
    if (model->k != static_cast<int>(a.parser_files.size()))
      throw Error(ErrorCode::ModelKMismatch,
                  "model expects " + std::to_string(model->k) +
                      " parsers, got " +
                      std::to_string(a.parser_files.size()) + " files");
  }

  // Model methods default to the normalization the model was trained with.
  const NormalizationConfig cfg =
      model && !a.norm.any_set() ? model->normalization : a.norm.to_config();
  auto bundles =
      read_corpus(a.parser_files, std::nullopt, cfg,
                  read_options(a.allow_mismatch));

  const int k = static_cast<int>(a.parser_files.size());
  if (a.reference < 1 || a.reference > k)
    throw Error(ErrorCode::Usage, "--reference must lie in [1, " +
                                      std::to_string(k) + "]");
  if (a.threshold && (a.method != "vote"))
    throw Error(ErrorCode::Usage, "--threshold is only used by vote");

  std::vector<std::vector<std::string>> raw;
  if (switching)
    for (const std::string& f : a.parser_files) raw.push_back(raw_lines(f));

  std::ostringstream out;
  std::vector<int> chosen;
  long crossing_sentences = 0;
  for (std::size_t s = 0; s < bundles.size(); ++s) {
    const SentenceBundle& b = bundles[s];
    if (switching) {
      const int idx = a.method == "sim-switch" ? similarity_switch(b)
                                               : bayes_switch(*model, b);
      chosen.push_back(idx);
      out << raw[idx - 1][s] << "\n";
      continue;
    }
    ConstituentSet result =
        a.method == "vote"
            ? constituent_voting(
                  b, {a.threshold ? *a.threshold : majority_threshold(b.k())})
            : nb_hybridize(*model, b);
    if (has_crossing(result)) {
      ++crossing_sentences;
      if (a.format == "trees")
        throw Error(ErrorCode::CrossingInput,
                    "sentence " + std::to_string(s + 1) +
                        ": combined output contains crossing brackets; use "
                        "--format tuples or a majority threshold");
      std::cerr << "warning: sentence " << (s + 1)
                << ": output contains crossing brackets\n";
    }
    if (a.format == "tuples") {
      emit_tuples(out, result);
    } else {
      const Tree ref_norm =
          normalize_tree(b.candidate_trees[a.reference - 1], cfg);
      out << render_bracketed(build_tree(result, ref_norm)) << "\n";
    }
  }

  if (!a.indices_file.empty() && !switching)
    throw Error(ErrorCode::Usage,
                "--indices is only written by switching methods");
  if (a.output.empty())
    std::cout << out.str();
  else
    write_text(a.output, out.str());
  // Switching always gets its sidecar when the output has a place for one.
  std::string indices_file = a.indices_file;
  if (indices_file.empty() && switching && !a.output.empty())
    indices_file = a.output + ".indices";
  if (!indices_file.empty()) {
    std::ostringstream idx;
    for (int i : chosen) idx << i << "\n";
    write_text(indices_file, idx.str());
  }
  if (crossing_sentences > 0)
    std::cerr << "warning: " << crossing_sentences
              << " sentence(s) contained crossing brackets\n";
  return 0;
}

// --- eval -------------------------------------------------------------

struct EvalArgs {
  std::vector<std::string> hyp_files;
  std::string gold_file;
  std::string json_file;
  bool significance = false;
  std::string significance_mode = "recall";
  double significance_alpha = 0.01;
  bool allow_mismatch = false;
  NormFlags norm;
};

int cmd_eval(const EvalArgs& a) {
  if (a.hyp_files.empty() || a.hyp_files.size() > 2)
    throw Error(ErrorCode::Usage, "eval takes one or two hypothesis files");
  if (a.significance && a.hyp_files.size() != 2)
    throw Error(ErrorCode::Usage, "--significance needs two hypothesis files");
  const NormalizationConfig cfg = a.norm.to_config();

  std::vector<std::vector<ConstituentSet>> hyps;
  std::vector<ConstituentSet> gold;
  std::vector<Metrics> metrics;
  for (const std::string& f : a.hyp_files) {
    auto bundles =
        read_corpus({f}, a.gold_file, cfg, read_options(a.allow_mismatch));
    std::vector<ConstituentSet> sets;
    std::vector<std::pair<ConstituentSet, ConstituentSet>> pairs;
    if (gold.empty())
      for (const auto& b : bundles) gold.push_back(*b.gold);
    for (const auto& b : bundles) {
      sets.push_back(b.candidates[0]);
      pairs.emplace_back(b.candidates[0], *b.gold);
    }
    hyps.push_back(std::move(sets));
    metrics.push_back(score_corpus(pairs));
  }

  std::cout << metrics_header() << "\n";
  for (std::size_t i = 0; i < a.hyp_files.size(); ++i)
    std::cout << metrics_row(a.hyp_files[i], metrics[i]) << "\n";
  for (std::size_t i = 0; i < a.hyp_files.size(); ++i)
    std::cout << "counts " << a.hyp_files[i] << ": matched="
              << metrics[i].matched
              << " hypothesized=" << metrics[i].hypothesized
              << " gold=" << metrics[i].gold_count << "\n";

  nlohmann::ordered_json j;
  for (std::size_t i = 0; i < a.hyp_files.size(); ++i)
    j["systems"][a.hyp_files[i]] = metrics_json(metrics[i]);

  if (a.significance) {
    const SignificanceMode mode = a.significance_mode == "precision"
                                      ? SignificanceMode::Precision
                                      : SignificanceMode::Recall;
    SignificanceResult r = significance_test(hyps[0], hyps[1], gold, mode,
                                             a.significance_alpha);
    std::cout << "significance (" << a.significance_mode
              << " units): disagreements=" << r.n_disagreements
              << " favoring-first=" << r.n_favoring_a << " p=" << r.p_value
              << " significant-at-" << a.significance_alpha << "="
              << (r.significant ? "yes" : "no") << "\n";
    j["significance"] = {{"mode", a.significance_mode},
                         {"disagreements", r.n_disagreements},
                         {"favoring_first", r.n_favoring_a},
                         {"p_value", r.p_value},
                         {"alpha", a.significance_alpha},
                         {"significant", r.significant}};
  }
  if (!a.json_file.empty()) write_text(a.json_file, j.dump(2) + "\n");
  return 0;
}

// --- oracle -----------------------------------------------------------

struct OracleArgs {
  std::vector<std::string> parser_files;
  std::string gold_file;
  std::string json_file;
  bool allow_mismatch = false;
  NormFlags norm;
};

int cmd_oracle(const OracleArgs& a) {
  if (a.parser_files.size() < 2)
    throw Error(ErrorCode::Usage, "oracle needs at least two parser files");
  auto bundles = read_corpus(a.parser_files, a.gold_file, a.norm.to_config(),
                             read_options(a.allow_mismatch));

  std::cout << metrics_header() << "\n";
  nlohmann::ordered_json j;
  double f_sum = 0.0, p_sum = 0.0, r_sum = 0.0;
  for (std::size_t i = 0; i < a.parser_files.size(); ++i) {
    Metrics m = corpus_metrics(bundles, static_cast<int>(i));
    f_sum += m.f_measure;
    p_sum += m.precision;
    r_sum += m.recall;
    const std::string name = "parser" + std::to_string(i + 1);
    std::cout << metrics_row(name, m) << "\n";
    j["parsers"][name] = metrics_json(m);
  }
  const double n = static_cast<double>(a.parser_files.size());
  char avg[160];
  std::snprintf(avg, sizeof(avg), "%-18s %8.2f %8.2f %8.2f %8.2f",
                "average-individual", p_sum / n, r_sum / n,
                (p_sum / n + r_sum / n) / 2.0, f_sum / n);
  std::cout << avg << "\n";
  j["average_individual"] = {{"precision", p_sum / n},
                             {"recall", r_sum / n},
                             {"f_measure", f_sum / n}};

  OracleResult sw = switching_oracle(bundles);
  std::cout << metrics_row("switching-oracle", sw.metrics) << "\n";
  j["switching_oracle"] = metrics_json(sw.metrics);
  auto usage = parser_usage(sw.chosen, static_cast<int>(a.parser_files.size()));
  std::ostringstream usage_line;
  usage_line << "switching-oracle usage:";
  for (const UsageRow& u : usage)
    usage_line << " parser" << u.parser << "=" << u.count;
  std::cout << usage_line.str() << "\n";

  Metrics mp = max_precision_oracle(bundles);
  std::cout << metrics_row("max-precision", mp) << "\n";
  j["max_precision_oracle"] = metrics_json(mp);

  if (!a.json_file.empty()) write_text(a.json_file, j.dump(2) + "\n");
  return 0;
}

// --- analyze ----------------------------------------------------------

struct AnalyzeArgs {
  std::vector<std::string> parser_files;
  std::string gold_file;
  std::string key = "label";
  int cap = 40;
  bool minority = false;
  std::string usage_file;
  int usage_k = 0;
  std::string json_file;
  bool allow_mismatch = false;
  NormFlags norm;
};

PartitionKey parse_key(const std::string& name) {
  if (name == "label") return PartitionKey::Label;
  if (name == "sentence-length") return PartitionKey::SentenceLength;
  if (name == "span-length") return PartitionKey::SpanLength;
  throw Error(ErrorCode::Usage, "unknown partition key: " + name);
}

int cmd_analyze(const AnalyzeArgs& a) {
  if (!a.usage_file.empty()) {
    if (a.usage_k < 1)
      throw Error(ErrorCode::Usage, "--usage requires --k (ensemble size)");
    std::ifstream in(a.usage_file);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + a.usage_file);
    std::vector<int> indices;
    int idx;
    while (in >> idx) indices.push_back(idx);
    auto rows = parser_usage(indices, a.usage_k);
    std::cout << usage_tsv(rows);
    if (!a.json_file.empty()) write_text(a.json_file, usage_json(rows) + "\n");
    return 0;
  }

  if (a.parser_files.size() < 2)
    throw Error(ErrorCode::Usage, "analyze needs at least two parser files");
  if (a.gold_file.empty())
    throw Error(ErrorCode::Usage, "analyze requires --gold");
  auto bundles = read_corpus(a.parser_files, a.gold_file, a.norm.to_config(),
                             read_options(a.allow_mismatch));
  const PartitionKey key = parse_key(a.key);
  auto reports = a.minority
                     ? minority_precision_report(bundles, key, a.cap)
                     : isolated_precision_report(bundles, key, a.cap);
  for (const PartitionReport& rep : reports) {
    std::cout << "# parser " << rep.parser << " ("
              << (a.minority ? "minority" : "isolated") << " constituents by "
              << partition_key_name(rep.key) << ")\n";
    std::cout << report_tsv(rep);
  }
  if (!a.json_file.empty())
    write_text(a.json_file, report_json(reports) + "\n");
  return 0;
}

// --- synth ------------------------------------------------------------

struct SynthArgs {
  std::string output_dir;
  SyntheticConfig cfg;
};

int cmd_synth(const SynthArgs& a) {
  auto bundles = generate_synthetic(a.cfg);
  std::filesystem::create_directories(a.output_dir);
  std::vector<Tree> gold;
  for (const auto& b : bundles) gold.push_back(*b.gold_tree);
  write_trees(a.output_dir + "/gold.trees", gold);
  for (int p = 0; p < a.cfg.k; ++p) {
    std::vector<Tree> trees;
    for (const auto& b : bundles) trees.push_back(b.candidate_trees[p]);
    write_trees(a.output_dir + "/parser" + std::to_string(p + 1) + ".trees",
                trees);
  }
  std::cout << "wrote " << bundles.size() << " sentences for " << a.cfg.k
            << " parsers plus gold to " << a.output_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parser ensemble combination toolkit"};
  app.require_subcommand(1);

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand(
      "train", "Estimate a naive Bayes combination model from parser outputs "
               "plus gold trees");
  train->add_option("files", train_args.parser_files, "Parser output files")
      ->required();
  train->add_option("--gold", train_args.gold_file, "Gold treebank file")
      ->required();
  train->add_option("-o,--output", train_args.output, "Model output path");
  train->add_option("--alpha", train_args.alpha,
                    "Add-alpha smoothing pseudo-count (must be > 0)");
  train->add_flag("--allow-token-mismatch", train_args.allow_mismatch,
                  "Downgrade token string mismatches to warnings");
  add_norm_flags(train, train_args.norm);

  CombineArgs combine_args;
  CLI::App* combine = app.add_subcommand(
      "combine", "Combine parser outputs by voting, naive Bayes "
                 "hybridization, or parser switching");
  combine->add_option("files", combine_args.parser_files,
                      "Parser output files")->required();
  combine->add_option("--method", combine_args.method,
                      "vote | nb | sim-switch | bayes-switch")
      ->check(CLI::IsMember({"vote", "nb", "sim-switch", "bayes-switch"}));
  combine->add_option("--threshold", combine_args.threshold,
                      "Vote threshold (default: majority)");
  combine->add_option("--model", combine_args.model_file,
                      "Model file for nb / bayes-switch");
  combine->add_option("--reference", combine_args.reference,
                      "1-based parser whose tree guides reconstruction");
  combine->add_option("--format", combine_args.format, "trees | tuples")
      ->check(CLI::IsMember({"trees", "tuples"}));
  combine->add_option("-o,--output", combine_args.output,
                      "Output file (default: stdout)");
  combine->add_option("--indices", combine_args.indices_file,
                      "Sidecar file for 1-based switching choices "
                      "(default: OUTPUT.indices)");
  combine->add_flag("--allow-token-mismatch", combine_args.allow_mismatch,
                    "Downgrade token string mismatches to warnings");
  add_norm_flags(combine, combine_args.norm);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand(
      "eval", "Score hypothesis trees against gold trees");
  eval->add_option("files", eval_args.hyp_files, "Hypothesis file(s)")
      ->required();
  eval->add_option("--gold", eval_args.gold_file, "Gold treebank file")
      ->required();
  eval->add_option("--json", eval_args.json_file, "Write JSON report here");
  eval->add_flag("--significance", eval_args.significance,
                 "Exact binomial test between two hypothesis files");
  eval->add_option("--significance-mode", eval_args.significance_mode,
                   "recall | precision disagreement units")
      ->check(CLI::IsMember({"recall", "precision"}));
  eval->add_option("--significance-alpha", eval_args.significance_alpha,
                   "Significance level");
  eval->add_flag("--allow-token-mismatch", eval_args.allow_mismatch,
                 "Downgrade token string mismatches to warnings");
  add_norm_flags(eval, eval_args.norm);

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Individual, switching-oracle, and max-precision upper "
                "bounds for an ensemble");
  oracle->add_option("files", oracle_args.parser_files, "Parser output files")
      ->required();
  oracle->add_option("--gold", oracle_args.gold_file, "Gold treebank file")
      ->required();
  oracle->add_option("--json", oracle_args.json_file, "Write JSON report here");
  oracle->add_flag("--allow-token-mismatch", oracle_args.allow_mismatch,
                   "Downgrade token string mismatches to warnings");
  add_norm_flags(oracle, oracle_args.norm);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Isolated/minority constituent precision reports and "
                 "switching usage tables");
  analyze->add_option("files", analyze_args.parser_files,
                      "Parser output files");
  analyze->add_option("--gold", analyze_args.gold_file, "Gold treebank file");
  analyze->add_option("--key", analyze_args.key,
                      "label | sentence-length | span-length")
      ->check(CLI::IsMember({"label", "sentence-length", "span-length"}));
  analyze->add_option("--cap", analyze_args.cap,
                      "Aggregate numeric buckets at this value");
  analyze->add_flag("--minority", analyze_args.minority,
                    "Report minority (non-majority multi-vote) constituents");
  analyze->add_option("--usage", analyze_args.usage_file,
                      "Switching index sidecar to tabulate instead");
  analyze->add_option("--k", analyze_args.usage_k,
                      "Ensemble size for --usage");
  analyze->add_option("--json", analyze_args.json_file,
                      "Write JSON report here");
  analyze->add_flag("--allow-token-mismatch", analyze_args.allow_mismatch,
                    "Downgrade token string mismatches to warnings");
  add_norm_flags(analyze, analyze_args.norm);

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a deterministic synthetic ensemble corpus");
  synth->add_option("-o,--output-dir", synth_args.output_dir,
                    "Directory for gold.trees and parserN.trees")
      ->required();
  synth->add_option("--sentences", synth_args.cfg.n_sentences,
                    "Number of sentences");
  synth->add_option("--min-len", synth_args.cfg.min_len, "Minimum tokens");
  synth->add_option("--max-len", synth_args.cfg.max_len, "Maximum tokens");
  synth->add_option("--k", synth_args.cfg.k, "Number of parsers");
  synth->add_option("--miss", synth_args.cfg.miss_rate,
                    "Per-parser gold-constituent drop rate");
  synth->add_option("--spurious", synth_args.cfg.spurious_rate,
                    "Per-parser spurious-span rate");
  synth->add_option("--miss-rates", synth_args.cfg.miss_rates,
                    "Comma-separated per-parser drop rates")
      ->delimiter(',');
  synth->add_option("--spurious-rates", synth_args.cfg.spurious_rates,
                    "Comma-separated per-parser spurious rates")
      ->delimiter(',');
  synth->add_option("--labels", synth_args.cfg.label_alphabet,
                    "Comma-separated label alphabet")
      ->delimiter(',');
  synth->add_option("--seed", synth_args.cfg.seed, "Generator seed");

  try {
    app.parse(argc, argv);
    if (train->parsed()) return cmd_train(train_args);
    if (combine->parsed()) return cmd_combine(combine_args);
    if (eval->parsed()) return cmd_eval(eval_args);
    if (oracle->parsed()) return cmd_oracle(oracle_args);
    if (analyze->parsed()) return cmd_analyze(analyze_args);
    if (synth->parsed()) return cmd_synth(synth_args);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "ERROR:usage: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "ERROR:" << code_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ERROR:internal: " << e.what() << "\n";
    return 1;
  }
}
