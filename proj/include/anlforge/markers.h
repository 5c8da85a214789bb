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

#ifndef ANLFORGE_MARKERS_H_
#define ANLFORGE_MARKERS_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "anlforge/graph.h"
#include "anlforge/text.h"

namespace anlforge {

enum class CandidateKind { kLeading, kSandwich };

std::string_view CandidateKindName(CandidateKind kind);

struct MarkerCandidate {
  std::string surface;
  CandidateKind kind;
  std::string doc_id;
  TokenSpan span;

  bool operator==(const MarkerCandidate &) const = default;
};

// Leading candidates run from a sentence start to the first component that
// starts in that sentence; sandwich candidates are the gaps between two
// consecutive components inside one sentence. Empty gaps and gaps touching a
// component are never emitted. Output is in document order.
std::vector<MarkerCandidate> ExtractCandidates(const ArgGraph &graph,
                                               const ArgText &text);

// Lookup key: tokens lowercased and joined by single spaces, so "However,"
// and "however ," share a key while "However" does not.
std::string NormalizeMarker(std::string_view surface);

class MarkerLexicon {
 public:
  MarkerLexicon() = default;

  // Adds a surface unless its key is filtered or already present.
  // Returns true if it was added.
  bool AddArgumentative(std::string_view surface);
  bool AddDiscourse(std::string_view surface);
  void AddFilter(std::string_view surface);

  const std::vector<std::string> &argumentative() const { return argumentative_; }
  const std::vector<std::string> &discourse() const { return discourse_; }
  const std::set<std::string> &filter_list() const { return filter_keys_; }

  bool empty() const { return keys_.empty(); }
  // True if the key of `surface` is an argumentative or discourse entry.
  bool Contains(std::string_view surface) const;
  bool ContainsKey(const std::string &key) const { return keys_.count(key) != 0; }
  int max_tokens() const { return max_tokens_; }

  // {"argumentative": [...], "discourse": [...]}
  nlohmann::json ToJson() const;
  static MarkerLexicon FromJson(const nlohmann::json &record);

 private:
  bool Add(std::string_view surface, std::vector<std::string> *into,
           std::set<std::string> *keys);

  std::vector<std::string> argumentative_;
  std::vector<std::string> discourse_;
  std::set<std::string> argumentative_keys_;
  std::set<std::string> discourse_keys_;
  std::set<std::string> filter_keys_;
  std::set<std::string> keys_;
  int max_tokens_ = 0;
};

struct LexiconStats {
  int raw_candidates = 0;
  int filtered = 0;
  int unique = 0;
};

// Candidates minus the filter list, deduplicated by NormalizeMarker key. The
// first surface seen for a key is kept.
MarkerLexicon BuildLexicon(const std::vector<std::string> &candidates,
                           const std::vector<std::string> &filter_list,
                           LexiconStats *stats = nullptr);

// Adds every lexicon hit inside a leading or sandwich gap to the graph's
// markers. Hits are taken greedily left to right, longest first. Existing
// markers are replaced.
ArgGraph AnnotateMarkers(const ArgGraph &graph, const ArgText &text,
                         const MarkerLexicon &lexicon);

// One rejected span per line; blank lines and '#' comments are ignored.
std::vector<std::string> ReadFilterList(const std::filesystem::path &path);

// doc_id<TAB>kind<TAB>start<TAB>end<TAB>surface
void WriteCandidatesTsv(const std::filesystem::path &path,
                        const std::vector<MarkerCandidate> &candidates);
std::vector<MarkerCandidate> ReadCandidatesTsv(const std::filesystem::path &path);

}  // namespace anlforge

#endif  // ANLFORGE_MARKERS_H_
