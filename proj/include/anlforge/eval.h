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

#ifndef ANLFORGE_EVAL_H_
#define ANLFORGE_EVAL_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "anlforge/anl_codec.h"
#include "anlforge/graph.h"
#include "anlforge/record.h"

namespace anlforge {

struct AceTuple {
  std::string type;
  int start = 0;
  int end = 0;

  auto operator<=>(const AceTuple &) const = default;
};

struct ArcTuple {
  std::string type;
  AceTuple head;
  AceTuple tail;

  auto operator<=>(const ArcTuple &) const = default;
};

std::vector<AceTuple> AceTuples(const ArgGraph &graph);
std::vector<ArcTuple> ArcTuples(const ArgGraph &graph);

struct PrfCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  // 0/0 is taken as 0.
  double precision() const;
  double recall() const;
  double f1() const;

  PrfCounts &operator+=(const PrfCounts &other);
  bool operator==(const PrfCounts &) const = default;
};

// Percentage (0-100) of generated sequences with at least one error of each
// kind. A sequence may count in several columns.
struct ErrorRates {
  double invalid_token = 0;
  double invalid_component = 0;
  double invalid_format = 0;
  int sequences = 0;

  bool operator==(const ErrorRates &) const = default;
};

struct LengthStats {
  double mean_len_standard = 0;
  double mean_len_abbr = 0;
  // Mean over documents of 100 * (standard - abbr) / standard.
  double reduction_pct = 0;
  int documents = 0;
};

struct EvalReport {
  PrfCounts ace;
  PrfCounts arc;
  ErrorRates error_rates;
  std::optional<LengthStats> length_stats;
};

// Exact-match micro scores pooled over the corpus. Predictions are matched
// to gold graphs by doc_id; the two sets of doc_ids must coincide or an
// AlignmentError is thrown.
EvalReport Score(const std::vector<ArgGraph> &gold,
                 const std::vector<ParseOutcome> &pred);

ErrorRates ComputeErrorRates(const std::vector<ParseOutcome> &outcomes);

enum class BucketKey { kAduCount, kSentenceCount };

// "adu_count" / "sentence_count".
BucketKey ParseBucketKey(const std::string &name);

// Per-bucket reports keyed by gold component count or sentence count.
// Buckets without documents are absent.
std::map<int, EvalReport> BucketScores(const std::vector<Document> &gold,
                                       const std::vector<ParseOutcome> &pred,
                                       BucketKey key);

// Target lengths in whitespace tokens. Sequences are matched by doc_id; the
// two sets must coincide.
LengthStats ComputeLengthStats(const std::vector<AnlSequence> &standard,
                               const std::vector<AnlSequence> &abbreviated);

nlohmann::json ReportToJson(const EvalReport &report);
nlohmann::json LengthStatsToJson(const LengthStats &stats);

}  // namespace anlforge

#endif  // ANLFORGE_EVAL_H_
