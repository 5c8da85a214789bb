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

#ifndef ANLFORGE_RECORD_H_
#define ANLFORGE_RECORD_H_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "anlforge/graph.h"
#include "anlforge/text.h"

namespace anlforge {

// One paragraph of a corpus: the text and its gold (or decoded) graph.
struct Document {
  ArgText text;
  ArgGraph graph;

  bool operator==(const Document &) const = default;
};

// Canonical record:
//   {doc_id, text, tokens:[{s,cs,ce}], sentences:[[a,b]],
//    components:[{id,type,ts,te}], relations:[{type,head,tail}],
//    markers:[[ts,te]]}
nlohmann::json DocumentToJson(const Document &doc);
// Throws ValidationError if the record is inconsistent.
Document DocumentFromJson(const nlohmann::json &record);

// Graph-only fields (components, relations, markers) used by decoded output.
nlohmann::json GraphToJson(const ArgGraph &graph);
ArgGraph GraphFromJson(const std::string &doc_id, const nlohmann::json &record);

// JSON Lines helpers. Blank lines are skipped on read.
std::vector<nlohmann::json> ReadJsonLines(const std::filesystem::path &path);
void WriteJsonLines(const std::filesystem::path &path,
                    const std::vector<nlohmann::json> &records);

std::vector<Document> ReadCorpus(const std::filesystem::path &path);
void WriteCorpus(const std::filesystem::path &path,
                 const std::vector<Document> &docs);

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, const std::string &content);

}  // namespace anlforge

#endif  // ANLFORGE_RECORD_H_
