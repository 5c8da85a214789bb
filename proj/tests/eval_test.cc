// Copyright 2026 The anlforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "anlforge/errors.h"
#include "anlforge/eval.h"
#include "anlforge/synthetic.h"
#include "support/oracles.h"

namespace anlforge {
namespace {

ParseOutcome Outcome(ArgGraph g, std::vector<ErrorKind> kinds = {}) {
  ParseOutcome o{std::move(g), {}};
  for (ErrorKind k : kinds) o.errors.push_back({k, "", 0});
  return o;
}

TEST(PrfTest, ZeroOverZeroIsZero) {
  PrfCounts c;
  EXPECT_EQ(c.precision(), 0.0);
  EXPECT_EQ(c.recall(), 0.0);
  EXPECT_EQ(c.f1(), 0.0);
  PrfCounts only_fn{0, 0, 3};
  EXPECT_EQ(only_fn.f1(), 0.0);
  PrfCounts mixed{3, 1, 2};
  EXPECT_DOUBLE_EQ(mixed.precision(), 0.75);
  EXPECT_DOUBLE_EQ(mixed.recall(), 0.6);
  EXPECT_DOUBLE_EQ(mixed.f1(), 2 * 0.75 * 0.6 / 1.35);
}

TEST(ScoreTest, ExactMatchOnly) {
  ArgGraph gold("d", {{0, "Claim", {0, 3}}, {0, "Premise", {5, 9}}}, {{"Support", 1, 0}});
  ArgGraph near("d", {{0, "Claim", {0, 3}}, {0, "Premise", {5, 8}}}, {{"Support", 1, 0}});
  EvalReport r = Score({gold}, {Outcome(near)});
  EXPECT_EQ(r.ace, (PrfCounts{1, 1, 1}));
  // The relation endpoint differs, so the relation is wrong as a whole.
  EXPECT_EQ(r.arc, (PrfCounts{0, 1, 1}));
  EvalReport perfect = Score({gold}, {Outcome(gold)});
  EXPECT_EQ(perfect.ace.f1(), 1.0);
  EXPECT_EQ(perfect.arc.f1(), 1.0);
}

TEST(ScoreTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 500; ++i) {
    auto [gold, pred] = testing::RandomScoringInstance(rng, "d" + std::to_string(i));
    EvalReport r = Score({gold}, {Outcome(pred)});
    PrfCounts ace = testing::OracleAce({gold}, {pred});
    PrfCounts arc = testing::OracleArc({gold}, {pred});
    ASSERT_EQ(r.ace, ace);
    ASSERT_EQ(r.arc, arc);
    ASSERT_EQ(r.ace.f1(), testing::OracleF1(ace));
    ASSERT_EQ(r.arc.f1(), testing::OracleF1(arc));
  }
}

TEST(ScoreTest, PooledCountsAndPermutationInvariance) {
  std::mt19937_64 rng(89);
  std::vector<ArgGraph> gold, pred;
  std::vector<ParseOutcome> outcomes;
  for (int i = 0; i < 200; ++i) {
    auto [g, p] = testing::RandomScoringInstance(rng, "doc" + std::to_string(i));
    gold.push_back(g);
    pred.push_back(p);
    outcomes.push_back(Outcome(p));
  }
  EvalReport r = Score(gold, outcomes);
  EXPECT_EQ(r.ace, testing::OracleAce(gold, pred));
  EXPECT_EQ(r.arc, testing::OracleArc(gold, pred));
  std::shuffle(outcomes.begin(), outcomes.end(), rng);
  EvalReport shuffled = Score(gold, outcomes);
  EXPECT_EQ(shuffled.ace, r.ace);
  EXPECT_EQ(shuffled.arc, r.arc);
}

TEST(ScoreTest, AlignmentErrors) {
  ArgGraph a("a", {}, {});
  ArgGraph b("b", {}, {});
  EXPECT_THROW(Score({a, b}, {Outcome(a)}), AlignmentError);
  EXPECT_THROW(Score({a}, {Outcome(b)}), AlignmentError);
  EXPECT_THROW(Score({a, b}, {Outcome(a), Outcome(a)}), AlignmentError);
}

TEST(ErrorRateTest, MixedSequencesCountInEveryColumn) {
  std::vector<ParseOutcome> o = {
      Outcome(ArgGraph("a", {}, {}), {ErrorKind::kInvalidToken, ErrorKind::kInvalidFormat}),
      Outcome(ArgGraph("b", {}, {}), {ErrorKind::kInvalidToken, ErrorKind::kInvalidToken}),
      Outcome(ArgGraph("c", {}, {}), {ErrorKind::kInvalidComponent}),
      Outcome(ArgGraph("d", {}, {}))};
  ErrorRates r = ComputeErrorRates(o);
  EXPECT_EQ(r.sequences, 4);
  EXPECT_DOUBLE_EQ(r.invalid_token, 50.0);
  EXPECT_DOUBLE_EQ(r.invalid_component, 25.0);
  EXPECT_DOUBLE_EQ(r.invalid_format, 25.0);
  EXPECT_EQ(ComputeErrorRates({}).sequences, 0);
  EXPECT_EQ(ComputeErrorRates({}).invalid_token, 0.0);
}

TEST(BucketTest, AdditivityAndSingleBucket) {
  SyntheticCorpus corpus(LabelSchema::Aae(), {}, 97);
  std::vector<Document> docs = corpus.Generate(150);
  std::mt19937_64 rng(101);
  std::vector<ParseOutcome> pred;
  std::vector<ArgGraph> gold;
  for (const Document &d : docs) {
    gold.push_back(d.graph);
    std::vector<ArgComponent> comps;
    for (const ArgComponent &c : d.graph.components()) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) != 0) comps.push_back(c);
    }
    pred.push_back(Outcome(ArgGraph(d.text.doc_id(), comps, {})));
  }
  EvalReport global = Score(gold, pred);
  for (const char *key : {"adu_count", "sentence_count"}) {
    std::map<int, EvalReport> buckets = BucketScores(docs, pred, ParseBucketKey(key));
    PrfCounts ace, arc;
    for (const auto &[bucket, report] : buckets) {
      EXPECT_GT(report.error_rates.sequences, 0) << "empty bucket " << bucket;
      ace += report.ace;
      arc += report.arc;
    }
    EXPECT_EQ(ace, global.ace) << key;
    EXPECT_EQ(arc, global.arc) << key;
  }
  std::vector<Document> one(docs.begin(), docs.begin() + 1);
  std::vector<ParseOutcome> one_pred(pred.begin(), pred.begin() + 1);
  auto single = BucketScores(one, one_pred, BucketKey::kAduCount);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.begin()->second.ace, Score({docs[0].graph}, one_pred).ace);
  EXPECT_THROW(ParseBucketKey("tokens"), SchemaError);
}

TEST(LengthStatsTest, MeanOfPerDocumentReductions) {
  std::vector<AnlSequence> standard = {{"a", AnlVariant::kAcre, "", "w w w w"},
                                       {"b", AnlVariant::kAcre, "", "w w w w w w w w w w"}};
  std::vector<AnlSequence> abbr = {{"b", AnlVariant::kAbbreviated, "", "w w w w w w w w"},
                                   {"a", AnlVariant::kAbbreviated, "", "w w w"}};
  LengthStats s = ComputeLengthStats(standard, abbr);
  EXPECT_EQ(s.documents, 2);
  EXPECT_DOUBLE_EQ(s.mean_len_standard, 7.0);
  EXPECT_DOUBLE_EQ(s.mean_len_abbr, 5.5);
  EXPECT_DOUBLE_EQ(s.reduction_pct, (25.0 + 20.0) / 2);
  EXPECT_THROW(ComputeLengthStats(standard, {abbr[0]}), AlignmentError);
}

TEST(ReportJsonTest, MirrorsFieldNames) {
  EvalReport r;
  r.ace = {3, 1, 2};
  r.error_rates = {10, 20, 30, 5};
  r.length_stats = LengthStats{10, 8, 20, 4};
  nlohmann::json j = ReportToJson(r);
  for (const char *k : {"tp", "fp", "fn", "precision", "recall", "micro_f1"}) {
    EXPECT_TRUE(j["ace"].contains(k)) << k;
    EXPECT_TRUE(j["arc"].contains(k)) << k;
  }
  EXPECT_EQ(j["error_rates"]["IC"], 20.0);
  EXPECT_EQ(j["length_stats"]["reduction_pct"], 20.0);
  EXPECT_FALSE(ReportToJson(EvalReport{}).contains("length_stats"));
}

}  // namespace
}  // namespace anlforge
