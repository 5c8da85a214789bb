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

#ifndef ANLFORGE_SYNTHETIC_H_
#define ANLFORGE_SYNTHETIC_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "anlforge/record.h"
#include "anlforge/schema.h"

namespace anlforge {

// Random argumentative paragraphs with known gold structure. Used by the
// property tests and the bundled demo corpus.
struct SyntheticOptions {
  int min_components = 0;
  int max_components = 6;
  int min_span_tokens = 1;
  int max_span_tokens = 6;
  // Upper bound on relations; only used when `tree` is false.
  int max_relations = 4;
  // Every component has at most one outgoing relation and there are no
  // cycles (essay-style). Otherwise relations are arbitrary pairs.
  bool tree = true;
  // Probability that a non-root component of a tree gets a parent.
  double attach_probability = 0.8;
  // Probability that a sentence opens with a marker phrase.
  double marker_probability = 0.6;
  // Record the marker phrases in graph.markers().
  bool annotate_markers = true;
};

class SyntheticCorpus {
 public:
  SyntheticCorpus(LabelSchema schema, SyntheticOptions options,
                  std::uint64_t seed);

  Document Next(const std::string &doc_id);
  std::vector<Document> Generate(int count, const std::string &prefix = "syn");

  std::mt19937_64 &rng() { return rng_; }

  // Marker phrases the generator draws from.
  static const std::vector<std::string> &MarkerPhrases();

 private:
  std::string Word();

  LabelSchema schema_;
  SyntheticOptions options_;
  std::mt19937_64 rng_;
};

// Writes documents as a standoff corpus: essayNNN.txt (title line, blank
// line, one paragraph per line) and essayNNN.ann with T/R lines. Relation
// types are written lowercase with a trailing "s" ("supports"). Documents
// are grouped `paragraphs_per_essay` at a time.
void WriteStandoffCorpus(const std::filesystem::path &dir,
                         const std::vector<Document> &docs,
                         int paragraphs_per_essay);

}  // namespace anlforge

#endif  // ANLFORGE_SYNTHETIC_H_
