#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "parsemble/combine.hpp"
#include "parsemble/errors.hpp"
#include "support/generators.hpp"

using namespace parsemble;
using testsupport::make_bundle;

namespace {

const Constituent A{"A", 0, 2};
const Constituent B{"B", 2, 4};
const Constituent C{"C", 0, 4};
const Constituent D{"D", 0, 1};

int popcount(const MembershipVector& m) {
  int n = 0;
  for (bool b : m) n += b ? 1 : 0;
  return n;
}

NaiveBayesModel symmetric_model(int k, double p) {
  NaiveBayesModel model;
  model.k = k;
  model.prior_true = 0.5;
  model.cond_true.assign(k, p);
  model.cond_false.assign(k, 1.0 - p);
  return model;
}

}  // namespace

TEST_CASE("majority threshold") {
  CHECK(majority_threshold(2) == 2);
  CHECK(majority_threshold(3) == 2);
  CHECK(majority_threshold(4) == 3);
  CHECK(majority_threshold(5) == 3);
  CHECK(majority_threshold(6) == 4);
}

TEST_CASE("candidate union tracks membership per parser") {
  auto bundle = make_bundle({{A, B}, {A}, {C}}, 4);
  auto u = candidate_union(bundle);
  REQUIRE(u.size() == 3);
  CHECK(u.at(A) == MembershipVector{true, true, false});
  CHECK(u.at(B) == MembershipVector{true, false, false});
  CHECK(u.at(C) == MembershipVector{false, false, true});
}

TEST_CASE("constituent voting keeps majority constituents") {
  auto bundle = make_bundle({{A, B}, {A}, {B, C}}, 4);
  auto out = constituent_voting(bundle, {majority_threshold(3)});
  CHECK(out.items == std::set<Constituent>{A, B});
  CHECK(out.n_tokens == 4);

  // Unanimity: threshold k keeps only unanimous constituents.
  auto strict = constituent_voting(bundle, {3});
  CHECK(strict.items.empty());
  auto loose = constituent_voting(bundle, {1});
  CHECK(loose.items == std::set<Constituent>{A, B, C});
}

TEST_CASE("voting threshold bounds are enforced") {
  auto bundle = make_bundle({{A}, {A}}, 4);
  CHECK_THROWS_AS(constituent_voting(bundle, {0}), Error);
  CHECK_THROWS_AS(constituent_voting(bundle, {3}), Error);
  auto single = make_bundle({{A}}, 4);
  try {
    constituent_voting(single, {1});
    FAIL("expected error for single-parser bundle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidConfig);
  }
}

TEST_CASE("voting monotonicity in the threshold") {
  std::mt19937_64 rng(123);
  for (int rep = 0; rep < 100; ++rep) {
    const int k = 2 + static_cast<int>(testsupport::pick(rng, 5));
    std::vector<std::vector<Constituent>> sets;
    for (int i = 0; i < k; ++i) {
      auto s = testsupport::random_nested_set(rng, 6);
      sets.emplace_back(s.items.begin(), s.items.end());
    }
    auto bundle = make_bundle(sets, 6);
    ConstituentSet prev = constituent_voting(bundle, {1});
    for (int t = 2; t <= k; ++t) {
      ConstituentSet cur = constituent_voting(bundle, {t});
      for (const auto& c : cur.items) CHECK(prev.items.count(c) == 1);
      prev = cur;
    }
    // No-invention: even the loosest output stays inside the union.
    auto u = candidate_union(bundle);
    auto all = constituent_voting(bundle, {1});
    for (const auto& c : all.items) CHECK(u.count(c) == 1);
  }
}

TEST_CASE("majority voting output never contains crossing brackets") {
  std::mt19937_64 rng(555);
  for (int rep = 0; rep < 400; ++rep) {
    const int k = 2 + static_cast<int>(testsupport::pick(rng, 5));
    const int n = 4 + static_cast<int>(testsupport::pick(rng, 6));
    std::vector<std::vector<Constituent>> sets;
    for (int i = 0; i < k; ++i) {
      auto s = testsupport::random_nested_set(rng, n);
      sets.emplace_back(s.items.begin(), s.items.end());
    }
    auto bundle = make_bundle(sets, n);
    for (int t = majority_threshold(k); t <= k; ++t)
      CHECK(!has_crossing(constituent_voting(bundle, {t})));
  }
}

TEST_CASE("naive Bayes training matches hand-computed smoothed estimates") {
  auto bundle = make_bundle({{A, B}, {A}}, 4, {{A}});
  NaiveBayesModel model = train_naive_bayes({bundle}, 1.0, {});
  CHECK(model.k == 2);
  CHECK(model.counts.n_candidates == 2);
  CHECK(model.counts.n_true == 1);
  CHECK(model.counts.joint_true == std::vector<long>{1, 1});
  CHECK(model.counts.joint_false == std::vector<long>{1, 0});
  CHECK(model.prior_true == doctest::Approx(0.5));
  CHECK(model.cond_true[0] == doctest::Approx(2.0 / 3.0));
  CHECK(model.cond_false[0] == doctest::Approx(2.0 / 3.0));
  CHECK(model.cond_true[1] == doctest::Approx(2.0 / 3.0));
  CHECK(model.cond_false[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("perfect parser probabilities approach 1 and 0 as smoothing vanishes") {
  auto b1 = make_bundle({{A, B}, {A, C}}, 4, {{A, B}});
  auto b2 = make_bundle({{C}, {C, D}}, 4, {{C}});
  NaiveBayesModel model = train_naive_bayes({b1, b2}, 1e-9, {});
  CHECK(model.cond_true[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(model.cond_false[0] == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("smoothing keeps all probabilities strictly inside (0,1)") {
  auto bundle = make_bundle({{A}, {A}}, 4, {{A}});
  NaiveBayesModel model = train_naive_bayes({bundle}, 1.0, {});
  for (int i = 0; i < model.k; ++i) {
    CHECK(model.cond_true[i] > 0.0);
    CHECK(model.cond_true[i] < 1.0);
    CHECK(model.cond_false[i] > 0.0);
    CHECK(model.cond_false[i] < 1.0);
  }
  CHECK(model.prior_true > 0.0);
  CHECK(model.prior_true < 1.0);
  CHECK_THROWS_AS(train_naive_bayes({bundle}, 0.0, {}), Error);
  CHECK_THROWS_AS(train_naive_bayes({bundle}, -1.0, {}), Error);
}

TEST_CASE("training requires gold and a nonempty corpus") {
  auto no_gold = make_bundle({{A}, {A}}, 4);
  try {
    train_naive_bayes({no_gold}, 1.0, {});
    FAIL("expected missing-gold error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingGold);
  }
  try {
    train_naive_bayes({}, 1.0, {});
    FAIL("expected empty-training-set error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyTrainingSet);
  }
}

TEST_CASE("posterior matches hand computation") {
  NaiveBayesModel model;
  model.k = 3;
  model.prior_true = 0.8;
  model.cond_true = {0.9, 0.9, 0.9};
  model.cond_false = {0.4, 0.4, 0.4};
  CHECK(nb_posterior(model, {true, true, false}) ==
        doctest::Approx(0.0648 / 0.0840).epsilon(1e-9));
  CHECK(nb_posterior(model, {true, false, false}) ==
        doctest::Approx(0.2).epsilon(1e-9));
  CHECK_THROWS_AS(nb_posterior(model, {true, false}), Error);
}

TEST_CASE("posterior symmetry under complement") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 100; ++rep) {
    const int k = 2 + static_cast<int>(testsupport::pick(rng, 4));
    NaiveBayesModel model;
    model.k = k;
    model.prior_true = 0.5;
    for (int i = 0; i < k; ++i) {
      double p = 0.05 + 0.9 * testsupport::unit(rng);
      model.cond_true.push_back(p);
      model.cond_false.push_back(1.0 - p);
    }
    MembershipVector m(k), inv(k);
    for (int i = 0; i < k; ++i) {
      m[i] = testsupport::unit(rng) < 0.5;
      inv[i] = !m[i];
    }
    CHECK(nb_posterior(model, m) + nb_posterior(model, inv) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("log-domain posterior agrees with the direct product form") {
  std::mt19937_64 rng(2718);
  for (int rep = 0; rep < 2000; ++rep) {
    const int k = 1 + static_cast<int>(testsupport::pick(rng, 5));
    NaiveBayesModel model;
    model.k = k;
    model.prior_true = 0.02 + 0.96 * testsupport::unit(rng);
    for (int i = 0; i < k; ++i) {
      model.cond_true.push_back(0.02 + 0.96 * testsupport::unit(rng));
      model.cond_false.push_back(0.02 + 0.96 * testsupport::unit(rng));
    }
    MembershipVector m(k);
    for (int i = 0; i < k; ++i) m[i] = testsupport::unit(rng) < 0.5;
    const double direct = testsupport::direct_posterior(model, m);
    const double got = nb_posterior(model, m);
    CHECK(std::abs(got - direct) <= 1e-12 * direct);
  }
}

TEST_CASE("hybridization keeps candidates with posterior above one half") {
  NaiveBayesModel model;
  model.k = 3;
  model.prior_true = 0.8;
  model.cond_true = {0.9, 0.9, 0.9};
  model.cond_false = {0.4, 0.4, 0.4};
  // A has membership (t,t,f), B has (t,f,f).
  auto bundle = make_bundle({{A, B}, {A}, {}}, 4);
  auto out = nb_hybridize(model, bundle);
  CHECK(out.items == std::set<Constituent>{A});
  CHECK(out.n_tokens == 4);
}

TEST_CASE("posterior of exactly one half is excluded") {
  NaiveBayesModel model = symmetric_model(2, 0.8);
  // One vote for, one against: the symmetric model scores this exactly 0.5.
  CHECK(nb_posterior(model, {true, false}) == doctest::Approx(0.5));
  auto bundle = make_bundle({{A}, {B}}, 4);
  auto out = nb_hybridize(model, bundle);
  CHECK(out.items.empty());
}

TEST_CASE("symmetric model reduces hybridization to majority voting") {
  NaiveBayesModel model = symmetric_model(3, 0.8);
  for (int bits = 1; bits < 8; ++bits) {
    MembershipVector m = {(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
    CHECK((nb_posterior(model, m) > 0.5) == (popcount(m) >= 2));
  }
}

TEST_CASE("symmetric hybridization equals voting for k up to 6") {
  for (int k = 2; k <= 6; ++k) {
    for (double p : {0.55, 0.7, 0.9}) {
      NaiveBayesModel model = symmetric_model(k, p);
      const int threshold = majority_threshold(k);
      for (int bits = 1; bits < (1 << k); ++bits) {
        MembershipVector m(k);
        for (int i = 0; i < k; ++i) m[i] = (bits >> i) & 1;
        CHECK((nb_posterior(model, m) > 0.5) == (popcount(m) >= threshold));
      }
    }
  }
}

TEST_CASE("hybridization never invents constituents and keeps unanimity") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const int k = 2 + static_cast<int>(testsupport::pick(rng, 4));
    NaiveBayesModel model;
    model.k = k;
    model.prior_true = 0.5 + 0.49 * testsupport::unit(rng);
    for (int i = 0; i < k; ++i) {
      double lo = 0.05 + 0.4 * testsupport::unit(rng);
      double hi = lo + (0.99 - lo) * (0.1 + 0.9 * testsupport::unit(rng));
      model.cond_false.push_back(lo);
      model.cond_true.push_back(hi);
    }
    std::vector<std::vector<Constituent>> sets;
    for (int i = 0; i < k; ++i) {
      auto s = testsupport::random_nested_set(rng, 6);
      s.items.insert(A);  // unanimous constituent
      sets.emplace_back(s.items.begin(), s.items.end());
    }
    auto bundle = make_bundle(sets, 6);
    auto out = nb_hybridize(model, bundle);
    CHECK(out.items.count(A) == 1);
    auto u = candidate_union(bundle);
    for (const auto& c : out.items) CHECK(u.count(c) == 1);
  }
}

TEST_CASE("similarity switching picks the most agreed-with parser") {
  // Pairwise intersections give scores (3, 2, 3); the tie goes low.
  auto bundle = make_bundle({{A, B}, {A, C}, {A, B, D}}, 4);
  CHECK(similarity_switch(bundle) == 1);

  auto identical = make_bundle({{A, B}, {A, B}, {A, B}}, 4);
  CHECK(similarity_switch(identical) == 1);

  auto pair = make_bundle({{A}, {A, B}}, 4);
  CHECK(similarity_switch(pair) == 1);

  // An actual winner: parser 2 shares more with the others.
  auto skew = make_bundle({{A, B}, {A, B, C}, {C}}, 4);
  CHECK(similarity_switch(skew) == 2);
}

TEST_CASE("bayes switching scores whole parses by decision posteriors") {
  NaiveBayesModel model;
  model.k = 2;
  model.prior_true = 0.5;
  model.cond_true = {0.8, 0.8};
  model.cond_false = {0.3, 0.3};
  const double post_a = nb_posterior(model, {true, true});
  const double post_b = nb_posterior(model, {true, false});
  CHECK(post_a == doctest::Approx(0.8767).epsilon(1e-4));
  CHECK(post_b == doctest::Approx(0.4324).epsilon(1e-4));
  CHECK(post_a * post_b == doctest::Approx(0.3791).epsilon(1e-3));
  CHECK(post_a * (1.0 - post_b) == doctest::Approx(0.4976).epsilon(1e-3));

  auto bundle = make_bundle({{A, B}, {A}}, 4);
  CHECK(bayes_switch(model, bundle) == 2);

  auto identical = make_bundle({{A, B}, {A, B}}, 4);
  CHECK(bayes_switch(model, identical) == 1);
}

TEST_CASE("bayes switching follows a near-perfect parser") {
  for (int target = 0; target < 3; ++target) {
    NaiveBayesModel model;
    model.k = 3;
    model.prior_true = 0.5;
    model.cond_true = {0.5, 0.5, 0.5};
    model.cond_false = {0.5, 0.5, 0.5};
    model.cond_true[target] = 1.0 - 1e-9;
    model.cond_false[target] = 1e-9;
    std::vector<std::vector<Constituent>> sets = {{A, B}, {A, B}, {A, B}};
    sets[target] = {A, C};
    auto bundle = make_bundle(sets, 4);
    CHECK(bayes_switch(model, bundle) == target + 1);
  }
}

TEST_CASE("model persistence round-trips and re-smooths") {
  auto b1 = make_bundle({{A, B}, {A, C}}, 4, {{A, B}});
  auto b2 = make_bundle({{C}, {C, D}}, 4, {{C}});
  NormalizationConfig cfg;
  cfg.ignore_pos = {",", "."};
  NaiveBayesModel model = train_naive_bayes({b1, b2}, 1.0, cfg);

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "parsemble_test";
  fs::create_directories(dir);
  fs::path p = dir / "model.json";
  save_model(model, p.string());
  NaiveBayesModel back = load_model(p.string());

  CHECK(back.k == model.k);
  CHECK(back.smoothing_alpha == model.smoothing_alpha);
  CHECK(back.prior_true == doctest::Approx(model.prior_true).epsilon(1e-15));
  CHECK(back.cond_true == model.cond_true);
  CHECK(back.cond_false == model.cond_false);
  CHECK(back.counts.n_candidates == model.counts.n_candidates);
  CHECK(back.counts.n_true == model.counts.n_true);
  CHECK(back.counts.joint_true == model.counts.joint_true);
  CHECK(back.counts.joint_false == model.counts.joint_false);
  CHECK(back.normalization.ignore_pos == cfg.ignore_pos);
  CHECK(back.normalization.strip_function_tags == cfg.strip_function_tags);

  // Counts allow re-smoothing without the training corpus.
  NaiveBayesModel sharp = model_from_counts(back.counts, 0.01, back.normalization);
  NaiveBayesModel direct = train_naive_bayes({b1, b2}, 0.01, cfg);
  CHECK(sharp.cond_true == direct.cond_true);
  CHECK(sharp.cond_false == direct.cond_false);
  CHECK(sharp.prior_true == doctest::Approx(direct.prior_true).epsilon(1e-15));
}

TEST_CASE("malformed model files are rejected") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "parsemble_test";
  fs::create_directories(dir);
  auto write = [&](const char* name, const std::string& body) {
    fs::path p = dir / name;
    std::ofstream(p) << body;
    return p.string();
  };
  try {
    load_model(write("notjson.json", "not json at all"));
    FAIL("expected format error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelFormat);
  }
  try {
    load_model(write("short.json",
                     R"({"k":2,"alpha":1.0,"prior_true":0.5,
                         "cond_true":[0.5],"cond_false":[0.5,0.5]})"));
    FAIL("expected format error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelFormat);
  }
  try {
    load_model(write("range.json",
                     R"({"k":1,"alpha":1.0,"prior_true":1.5,
                         "cond_true":[0.5],"cond_false":[0.5]})"));
    FAIL("expected format error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelFormat);
  }
}

TEST_CASE("ensemble size mismatches are reported") {
  NaiveBayesModel model = symmetric_model(3, 0.8);
  auto bundle = make_bundle({{A}, {B}}, 4);
  try {
    nb_hybridize(model, bundle);
    FAIL("expected size mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelKMismatch);
  }
  CHECK_THROWS_AS(bayes_switch(model, bundle), Error);
}
