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

#include "anlforge/eval.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "anlforge/errors.h"

namespace anlforge {

using nlohmann::json;

namespace {

template <typename T>
PrfCounts Match(std::vector<T> gold, std::vector<T> pred) {
  std::sort(gold.begin(), gold.end());
  gold.erase(std::unique(gold.begin(), gold.end()), gold.end());
  std::sort(pred.begin(), pred.end());
  pred.erase(std::unique(pred.begin(), pred.end()), pred.end());
  std::vector<T> common;
  std::set_intersection(gold.begin(), gold.end(), pred.begin(), pred.end(),
                        std::back_inserter(common));
  PrfCounts counts;
  counts.tp = static_cast<long>(common.size());
  counts.fp = static_cast<long>(pred.size()) - counts.tp;
  counts.fn = static_cast<long>(gold.size()) - counts.tp;
  return counts;
}

std::map<std::string, const ParseOutcome *> IndexPredictions(
    const std::vector<ParseOutcome> &pred) {
  std::map<std::string, const ParseOutcome *> index;
  for (const ParseOutcome &p : pred) {
    if (!index.emplace(p.graph.doc_id(), &p).second) {
      throw AlignmentError("duplicate prediction for " + p.graph.doc_id());
    }
  }
  return index;
}

int WhitespaceTokens(const std::string &s) {
  std::istringstream in(s);
  std::string word;
  int count = 0;
  while (in >> word) ++count;
  return count;
}

json CountsToJson(const PrfCounts &c) {
  return {{"tp", c.tp},
          {"fp", c.fp},
          {"fn", c.fn},
          {"precision", c.precision()},
          {"recall", c.recall()},
          {"micro_f1", c.f1()}};
}

}  // namespace

std::vector<AceTuple> AceTuples(const ArgGraph &graph) {
  std::vector<AceTuple> out;
  for (const ArgComponent &c : graph.components()) {
    out.push_back({c.type, c.span.start, c.span.end});
  }
  return out;
}

std::vector<ArcTuple> ArcTuples(const ArgGraph &graph) {
  std::vector<AceTuple> ace = AceTuples(graph);
  std::vector<ArcTuple> out;
  for (const ArgRelation &r : graph.relations()) {
    out.push_back({r.type, ace.at(r.head), ace.at(r.tail)});
  }
  return out;
}

double PrfCounts::precision() const {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double PrfCounts::recall() const {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

// Same value as 2PR / (P + R), with a single rounding step.
double PrfCounts::f1() const {
  return tp == 0 ? 0.0
                 : 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
}

PrfCounts &PrfCounts::operator+=(const PrfCounts &other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

ErrorRates ComputeErrorRates(const std::vector<ParseOutcome> &outcomes) {
  ErrorRates rates;
  rates.sequences = static_cast<int>(outcomes.size());
  if (outcomes.empty()) return rates;
  int it = 0, ic = 0, inf = 0;
  for (const ParseOutcome &o : outcomes) {
    it += o.HasError(ErrorKind::kInvalidToken);
    ic += o.HasError(ErrorKind::kInvalidComponent);
    inf += o.HasError(ErrorKind::kInvalidFormat);
  }
  const double n = static_cast<double>(outcomes.size());
  rates.invalid_token = 100.0 * it / n;
  rates.invalid_component = 100.0 * ic / n;
  rates.invalid_format = 100.0 * inf / n;
  return rates;
}

EvalReport Score(const std::vector<ArgGraph> &gold,
                 const std::vector<ParseOutcome> &pred) {
  std::map<std::string, const ParseOutcome *> index = IndexPredictions(pred);
  if (index.size() != gold.size()) {
    throw AlignmentError("gold has " + std::to_string(gold.size()) +
                         " documents, predictions cover " +
                         std::to_string(index.size()));
  }
  EvalReport report;
  for (const ArgGraph &g : gold) {
    auto it = index.find(g.doc_id());
    if (it == index.end()) {
      throw AlignmentError("no prediction for " + g.doc_id());
    }
    const ArgGraph &p = it->second->graph;
    report.ace += Match(AceTuples(g), AceTuples(p));
    report.arc += Match(ArcTuples(g), ArcTuples(p));
  }
  report.error_rates = ComputeErrorRates(pred);
  return report;
}

BucketKey ParseBucketKey(const std::string &name) {
  if (name == "adu_count") return BucketKey::kAduCount;
  if (name == "sentence_count") return BucketKey::kSentenceCount;
  throw SchemaError("unknown bucket key '" + name +
                    "' (expected adu_count or sentence_count)");
}

std::map<int, EvalReport> BucketScores(const std::vector<Document> &gold,
                                       const std::vector<ParseOutcome> &pred,
                                       BucketKey key) {
  std::map<std::string, const ParseOutcome *> index = IndexPredictions(pred);
  if (index.size() != gold.size()) {
    throw AlignmentError("gold and prediction document counts differ");
  }
  std::map<int, std::pair<std::vector<ArgGraph>, std::vector<ParseOutcome>>> groups;
  for (const Document &d : gold) {
    auto it = index.find(d.text.doc_id());
    if (it == index.end()) throw AlignmentError("no prediction for " + d.text.doc_id());
    int bucket = key == BucketKey::kAduCount
                     ? static_cast<int>(d.graph.components().size())
                     : static_cast<int>(d.text.sentences().size());
    groups[bucket].first.push_back(d.graph);
    groups[bucket].second.push_back(*it->second);
  }
  std::map<int, EvalReport> out;
  for (auto &[bucket, group] : groups) {
    out[bucket] = Score(group.first, group.second);
  }
  return out;
}

LengthStats ComputeLengthStats(const std::vector<AnlSequence> &standard,
                               const std::vector<AnlSequence> &abbreviated) {
  std::map<std::string, const AnlSequence *> abbr;
  for (const AnlSequence &s : abbreviated) abbr[s.doc_id] = &s;
  if (abbr.size() != standard.size() || abbreviated.size() != standard.size()) {
    throw AlignmentError("standard and abbreviated sequence sets differ in size");
  }
  LengthStats stats;
  double total_std = 0, total_abbr = 0, total_reduction = 0;
  for (const AnlSequence &s : standard) {
    auto it = abbr.find(s.doc_id);
    if (it == abbr.end()) throw AlignmentError("no abbreviated sequence for " + s.doc_id);
    int ls = WhitespaceTokens(s.target);
    int la = WhitespaceTokens(it->second->target);
    if (ls == 0) continue;
    total_std += ls;
    total_abbr += la;
    total_reduction += 100.0 * (ls - la) / ls;
    ++stats.documents;
  }
  if (stats.documents > 0) {
    stats.mean_len_standard = total_std / stats.documents;
    stats.mean_len_abbr = total_abbr / stats.documents;
    stats.reduction_pct = total_reduction / stats.documents;
  }
  return stats;
}

json LengthStatsToJson(const LengthStats &stats) {
  return {{"mean_len_standard", stats.mean_len_standard},
          {"mean_len_abbr", stats.mean_len_abbr},
          {"reduction_pct", stats.reduction_pct},
          {"documents", stats.documents}};
}

json ReportToJson(const EvalReport &report) {
  json out = {{"ace", CountsToJson(report.ace)},
              {"arc", CountsToJson(report.arc)},
              {"error_rates",
               {{"IT", report.error_rates.invalid_token},
                {"IC", report.error_rates.invalid_component},
                {"IF", report.error_rates.invalid_format},
                {"sequences", report.error_rates.sequences}}}};
  if (report.length_stats) out["length_stats"] = LengthStatsToJson(*report.length_stats);
  return out;
}

}  // namespace anlforge
