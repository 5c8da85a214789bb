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

#ifndef ANLFORGE_INGEST_H_
#define ANLFORGE_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "anlforge/record.h"
#include "anlforge/schema.h"

namespace anlforge {

enum class CorpusKind { kAae, kAaeFg, kCdcp, kDmPairs };

struct CorpusDescriptor {
  CorpusKind kind;
  std::string name;
  // Label presets; DM pair corpora carry no schema.
  std::optional<LabelSchema> schema;
  // False when markers routinely fall inside component spans, which rules out
  // the marker-enclosing target format.
  bool markers_outside_components = true;

  // "aae", "aae-fg", "cdcp" or "dm".
  static CorpusDescriptor ByName(std::string_view name);
};

struct IngestResult {
  std::vector<Document> docs;
  std::vector<std::string> warnings;
  // Documents whose relations do not form a forest.
  int non_tree_documents = 0;
};

// Maps a character range [char_start, char_end) of `text` to the smallest
// token span covering every token it touches. `snapped` is set when a
// boundary falls inside a token. Throws AlignmentError if no token is
// touched.
TokenSpan AlignCharSpan(const ArgText &text, std::size_t char_start,
                        std::size_t char_end, bool *snapped);

struct Paragraph {
  std::size_t offset;
  std::string text;
};

// Essay body split into paragraphs. The first line (the prompt) is skipped;
// every further non-empty line is one paragraph, so blank-line and
// single-newline layouts give the same result.
std::vector<Paragraph> SplitParagraphs(std::string_view essay);

// Reads brat-style *.txt / *.ann pairs from `root`. With `fine_labels`
// (essay<TAB>T-id<TAB>label lines), component labels are replaced by the
// fine-grained ones. Output is sorted by doc_id ("essay001-p01", ...).
IngestResult ReadStandoffCorpus(
    const std::filesystem::path &root, const LabelSchema &schema,
    const std::optional<std::filesystem::path> &fine_labels = std::nullopt);

// Reads CDCP-style NNNNN.txt / NNNNN.ann.json pairs (prop_offsets,
// prop_labels, reasons, evidences); one document per comment.
IngestResult ReadCdcpCorpus(const std::filesystem::path &root);

struct DmPair {
  std::string sen1;
  // Second sentence with the leading connective removed.
  std::string sen2;
  std::string dm;

  bool operator==(const DmPair &) const = default;
};

struct DmReadResult {
  std::vector<DmPair> pairs;
  int skipped = 0;
};

// Tab-separated sen1, sen2, dm lines where sen2 still starts with dm.
// Lines without exactly three non-empty fields are skipped and counted; a
// dm that does not prefix sen2 is a ValidationError.
DmReadResult ReadDmPairs(const std::filesystem::path &path);

nlohmann::json DmPairToJson(const DmPair &pair);
DmPair DmPairFromJson(const nlohmann::json &record);

std::map<std::string, int> DmHistogram(const std::vector<DmPair> &pairs);

}  // namespace anlforge

#endif  // ANLFORGE_INGEST_H_
