#include "parsemble/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "parsemble/combine.hpp"
#include "parsemble/errors.hpp"

namespace parsemble {

namespace {

constexpr const char* kPosTags[] = {"NN", "VB", "DT", "JJ", "IN", "RB"};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (sentence, role); role 0 drives the gold tree and
// role i the i-th parser's noise, so corpora that differ only in k or in
// per-parser rates share identical gold trees.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t sentence,
                          std::uint64_t role) {
  return std::mt19937_64(
      splitmix64(splitmix64(splitmix64(seed) ^ sentence) ^ (role << 32)));
}

// Bounded draws avoid std::uniform_int_distribution, whose output is not
// pinned down by the standard; results stay reproducible across toolchains.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Tree random_binary_tree(std::mt19937_64& rng, const SyntheticConfig& cfg,
                        const std::vector<std::string>& tokens,
                        const std::vector<std::string>& pos, int lo, int hi) {
  if (hi - lo == 1) {
    Tree t;
    t.label = pos[lo];
    t.token = tokens[lo];
    return t;
  }
  Tree t;
  t.label = cfg.label_alphabet[draw_below(rng, cfg.label_alphabet.size())];
  const int split = lo + 1 + static_cast<int>(draw_below(rng, hi - lo - 1));
  t.children.push_back(random_binary_tree(rng, cfg, tokens, pos, lo, split));
  t.children.push_back(random_binary_tree(rng, cfg, tokens, pos, split, hi));
  return t;
}

bool crosses_any(const Constituent& c, const std::set<Constituent>& items) {
  return std::any_of(items.begin(), items.end(),
                     [&](const Constituent& o) { return spans_cross(c, o); });
}

void validate(const SyntheticConfig& cfg) {
  auto bad = [](const char* what) {
    throw Error(ErrorCode::InvalidConfig, what);
  };
  if (cfg.n_sentences < 1) bad("n_sentences must be at least 1");
  if (cfg.min_len < 2) bad("min_len must be at least 2");
  if (cfg.max_len < cfg.min_len) bad("max_len must be at least min_len");
  if (cfg.k < 2) bad("k must be at least 2");
  if (cfg.label_alphabet.empty()) bad("label_alphabet must be nonempty");
  auto bad_rate = [](double r) { return !(r >= 0.0 && r < 1.0); };
  if (bad_rate(cfg.miss_rate) || bad_rate(cfg.spurious_rate))
    bad("rates must lie in [0, 1)");
  for (const auto* rates : {&cfg.miss_rates, &cfg.spurious_rates}) {
    if (rates->empty()) continue;
    if (static_cast<int>(rates->size()) != cfg.k)
      bad("per-parser rate lists must have k entries");
    if (std::any_of(rates->begin(), rates->end(), bad_rate))
      bad("rates must lie in [0, 1)");
  }
}

struct BucketKey {
  // Numeric buckets sort by value; the cap bucket last; labels sort
  // alphabetically.
  long value = 0;
  std::string label;

  auto operator<=>(const BucketKey&) const = default;
};

std::string bucket_name(const BucketKey& b, PartitionKey key) {
  return key == PartitionKey::Label ? b.label : std::to_string(b.value);
}

std::vector<PartitionReport> precision_report(
    const std::vector<SentenceBundle>& bundles, PartitionKey key, int cap,
    long min_votes, long max_votes) {
  if (bundles.empty()) throw Error(ErrorCode::EmptyCorpus, "no sentences");
  const int k = bundles.front().k();

  const bool capped = cap > 0 && key != PartitionKey::Label;
  auto bucket_of = [&](const SentenceBundle& b,
                       const Constituent& c) -> BucketKey {
    switch (key) {
      case PartitionKey::Label: return {0, c.label};
      case PartitionKey::SentenceLength:
        return {capped ? std::min<long>(b.n_tokens(), cap) : b.n_tokens(), ""};
      case PartitionKey::SpanLength: {
        const long len = c.end - c.start;
        return {capped ? std::min<long>(len, cap) : len, ""};
      }
    }
    return {};
  };

  std::set<BucketKey> universe;
  struct Cell {
    long count = 0;
    long correct = 0;
  };
  std::vector<std::map<BucketKey, Cell>> cells(k);

  for (std::size_t s = 0; s < bundles.size(); ++s) {
    const SentenceBundle& b = bundles[s];
    if (!b.gold)
      throw Error(ErrorCode::MissingGold,
                  "sentence " + std::to_string(s + 1) + " has no gold parse");
    for (const auto& [c, m] : candidate_union(b)) {
      universe.insert(bucket_of(b, c));
      const long votes = std::count(m.begin(), m.end(), true);
      if (votes < min_votes || votes > max_votes) continue;
      const bool correct = b.gold->items.count(c) > 0;
      for (int i = 0; i < k; ++i) {
        if (!m[i]) continue;
        Cell& cell = cells[i][bucket_of(b, c)];
        ++cell.count;
        if (correct) ++cell.correct;
      }
    }
  }

  // Numeric buckets fill contiguously so the rows read like a figure axis.
  if (key != PartitionKey::Label && !universe.empty()) {
    const long lo = universe.begin()->value;
    const long hi = std::prev(universe.end())->value;
    for (long v = lo; v <= hi; ++v) universe.insert({v, ""});
  }

  std::vector<PartitionReport> reports;
  for (int i = 0; i < k; ++i) {
    PartitionReport rep;
    rep.key = key;
    rep.parser = i + 1;
    for (const BucketKey& b : universe) {
      PartitionRow row;
      row.bucket = bucket_name(b, key);
      if (capped && b.value == cap) row.bucket = ">=" + row.bucket;
      if (auto it = cells[i].find(b); it != cells[i].end()) {
        row.count = it->second.count;
        if (row.count > 0)
          row.precision = 100.0 * it->second.correct / row.count;
      }
      rep.rows.push_back(std::move(row));
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace

std::vector<PartitionReport> isolated_precision_report(
    const std::vector<SentenceBundle>& bundles, PartitionKey key, int cap) {
  return precision_report(bundles, key, cap, 1, 1);
}

std::vector<PartitionReport> minority_precision_report(
    const std::vector<SentenceBundle>& bundles, PartitionKey key, int cap) {
  if (bundles.empty()) throw Error(ErrorCode::EmptyCorpus, "no sentences");
  const int k = bundles.front().k();
  return precision_report(bundles, key, cap, 2, majority_threshold(k) - 1);
}

std::vector<UsageRow> parser_usage(const std::vector<int>& indices, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidConfig, "k must be at least 1");
  std::vector<UsageRow> rows(k);
  for (int i = 0; i < k; ++i) rows[i].parser = i + 1;
  for (int idx : indices) {
    if (idx < 1 || idx > k)
      throw Error(ErrorCode::InvalidConfig,
                  "parser index " + std::to_string(idx) + " outside [1, " +
                      std::to_string(k) + "]");
    ++rows[idx - 1].count;
  }
  const long total = static_cast<long>(indices.size());
  for (UsageRow& r : rows)
    r.percent = total == 0 ? 0.0 : 100.0 * r.count / total;
  return rows;
}

std::vector<SentenceBundle> generate_synthetic(const SyntheticConfig& cfg) {
  validate(cfg);

  std::vector<SentenceBundle> bundles;
  bundles.reserve(cfg.n_sentences);
  for (int s = 0; s < cfg.n_sentences; ++s) {
    std::mt19937_64 gold_rng = substream(cfg.seed, s, 0);
    const int len =
        cfg.min_len +
        static_cast<int>(draw_below(gold_rng, cfg.max_len - cfg.min_len + 1));

    SentenceBundle b;
    std::vector<std::string> pos;
    for (int i = 0; i < len; ++i) {
      b.tokens.push_back("w" + std::to_string(i));
      pos.push_back(kPosTags[draw_below(gold_rng, std::size(kPosTags))]);
    }
    Tree gold_tree =
        random_binary_tree(gold_rng, cfg, b.tokens, pos, 0, len);

    NormalizationConfig norm;
    const ConstituentSet gold_set = extract_constituents(gold_tree, norm);

    for (int p = 0; p < cfg.k; ++p) {
      std::mt19937_64 rng = substream(cfg.seed, s, p + 1);
      const double miss =
          cfg.miss_rates.empty() ? cfg.miss_rate : cfg.miss_rates[p];
      const double spurious = cfg.spurious_rates.empty()
                                  ? cfg.spurious_rate
                                  : cfg.spurious_rates[p];

      ConstituentSet view;
      view.n_tokens = len;
      for (const Constituent& c : gold_set.items) {
        const bool is_root = c.start == 0 && c.end == len;
        if (is_root || draw_unit(rng) >= miss) view.items.insert(c);
      }
      for (int attempt = 0; attempt + 1 < len; ++attempt) {
        if (draw_unit(rng) >= spurious) continue;
        const int start = static_cast<int>(draw_below(rng, len - 1));
        const int max_len = len - start;
        const int span =
            2 + static_cast<int>(draw_below(rng, max_len - 1));
        Constituent c{
            cfg.label_alphabet[draw_below(rng, cfg.label_alphabet.size())],
            start, start + span};
        if (!crosses_any(c, view.items)) view.items.insert(c);
      }

      b.candidates.push_back(view);
      b.candidate_trees.push_back(build_tree(view, gold_tree));
    }

    b.gold = gold_set;
    b.gold_tree = std::move(gold_tree);
    bundles.push_back(std::move(b));
  }
  return bundles;
}

namespace {

std::string format_precision(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

}  // namespace

std::string report_tsv(const PartitionReport& report) {
  std::ostringstream out;
  out << "bucket\tcount\tprecision\n";
  for (const PartitionRow& row : report.rows) {
    out << row.bucket << "\t" << row.count << "\t"
        << (row.precision ? format_precision(*row.precision) : "NA") << "\n";
  }
  return out.str();
}

std::string report_json(const std::vector<PartitionReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const PartitionReport& rep : reports) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const PartitionRow& row : rep.rows) {
      nlohmann::ordered_json r{{"bucket", row.bucket}, {"count", row.count}};
      if (row.precision)
        r["precision"] = *row.precision;
      else
        r["precision"] = nullptr;
      rows.push_back(std::move(r));
    }
    out.push_back(nlohmann::ordered_json{{"parser", rep.parser},
                                         {"key", partition_key_name(rep.key)},
                                         {"rows", std::move(rows)}});
  }
  return out.dump(2) + "\n";
}

std::string usage_tsv(const std::vector<UsageRow>& rows) {
  std::ostringstream out;
  out << "parser\tcount\tpercent\n";
  for (const UsageRow& r : rows)
    out << r.parser << "\t" << r.count << "\t" << std::lround(r.percent)
        << "\n";
  return out.str();
}

std::string usage_json(const std::vector<UsageRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const UsageRow& r : rows)
    out.push_back(nlohmann::ordered_json{
        {"parser", r.parser}, {"count", r.count}, {"percent", r.percent}});
  return out.dump(2) + "\n";
}

const char* partition_key_name(PartitionKey key) {
  switch (key) {
    case PartitionKey::Label: return "label";
    case PartitionKey::SentenceLength: return "sentence_length";
    case PartitionKey::SpanLength: return "span_length";
  }
  return "unknown";
}

}  // namespace parsemble
