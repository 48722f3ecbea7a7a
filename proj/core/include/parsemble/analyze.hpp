#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parsemble/treebank.hpp"

namespace parsemble {

enum class PartitionKey { Label, SentenceLength, SpanLength };

struct PartitionRow {
  std::string bucket;
  long count = 0;
  std::optional<double> precision;  // percent; absent exactly when count == 0
};

struct PartitionReport {
  PartitionKey key;
  int parser = 0;  // 1-based
  std::vector<PartitionRow> rows;
};

// Isolated constituents are candidates proposed by exactly one parser.  For
// each parser, buckets its isolated constituents by key and reports how many
// were correct.  Numeric keys use unit-width buckets with a ">=cap" bucket
// aggregating the tail; all reports share one bucket universe so absent
// buckets show count 0 / precision NA.
std::vector<PartitionReport> isolated_precision_report(
    const std::vector<SentenceBundle>& bundles, PartitionKey key, int cap = 40);

// Same partitioning for minority constituents: proposed by more than one
// parser but fewer than a majority.  Below k = 4 no vote count qualifies and
// every row is zero.
std::vector<PartitionReport> minority_precision_report(
    const std::vector<SentenceBundle>& bundles, PartitionKey key, int cap = 40);

struct UsageRow {
  int parser = 0;  // 1-based
  long count = 0;
  double percent = 0.0;  // full precision; reports round to integers
};

// Frequency table of switching decisions.
std::vector<UsageRow> parser_usage(const std::vector<int>& indices, int k);

struct SyntheticConfig {
  int n_sentences = 100;
  int min_len = 5;   // tokens; at least 2
  int max_len = 20;
  int k = 3;
  double miss_rate = 0.1;      // per-parser chance of dropping a gold constituent
  double spurious_rate = 0.1;  // per-parser chance of inserting a random span
  // Optional per-parser overrides; empty means the scalar rates apply to all.
  std::vector<double> miss_rates;
  std::vector<double> spurious_rates;
  std::vector<std::string> label_alphabet = {"S",  "NP",   "VP",  "PP",
                                             "SBAR", "ADJP", "ADVP"};
  std::uint64_t seed = 1;
};

// Deterministic corpus of random binary-branching gold trees with k noisy
// parser views: each parser independently drops non-root gold constituents
// and inserts random non-crossing spans, so every parser's set stays a tree.
// The RNG stream is partitioned per sentence and per parser, which keeps the
// gold trees identical across runs that differ only in k or rates.
std::vector<SentenceBundle> generate_synthetic(const SyntheticConfig& cfg);

// bucket <tab> count <tab> precision ("NA" when absent), one row per line.
std::string report_tsv(const PartitionReport& report);
std::string report_json(const std::vector<PartitionReport>& reports);

std::string usage_tsv(const std::vector<UsageRow>& rows);
std::string usage_json(const std::vector<UsageRow>& rows);

const char* partition_key_name(PartitionKey key);

}  // namespace parsemble
