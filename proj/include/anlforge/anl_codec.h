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

#ifndef ANLFORGE_ANL_CODEC_H_
#define ANLFORGE_ANL_CODEC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "anlforge/graph.h"
#include "anlforge/schema.h"
#include "anlforge/text.h"

namespace anlforge {

// Augmented natural language target formats.
//
//   kComponentOnly  [ span | Type ]
//   kAcre           [ span | Type | Rel = tail span ]
//   kMeAcre         as kAcre, plus (( marker )) around marker spans
//   kAbbreviated    [ span | Type T1 | Rel = T2 ]  with per-type ID tokens
enum class AnlVariant { kComponentOnly, kAcre, kMeAcre, kAbbreviated };

// "comp", "acre", "me", "abbr".
std::string_view VariantName(AnlVariant variant);
// Accepts the short names above; throws SchemaError otherwise.
AnlVariant ParseVariant(std::string_view name);

struct AnlSequence {
  std::string doc_id;
  AnlVariant variant = AnlVariant::kAcre;
  std::string input;
  std::string target;
};

enum class ErrorKind { kInvalidToken, kInvalidComponent, kInvalidFormat };

// "INVALID_TOKEN", "INVALID_COMPONENT", "INVALID_FORMAT".
std::string_view ErrorKindName(ErrorKind kind);
ErrorKind ParseErrorKind(std::string_view name);

struct ParseError {
  ErrorKind kind;
  std::string detail;
  // Byte offset into the decoded target.
  std::size_t location = 0;
};

struct ParseOutcome {
  ArgGraph graph;
  std::vector<ParseError> errors;

  bool HasError(ErrorKind kind) const;
};

// Linearizes a validated graph. Throws ValidationError / SchemaError when the
// graph does not fit `text` and `schema`. Markers are only rendered for
// kMeAcre.
AnlSequence Encode(const ArgGraph &graph, const ArgText &text,
                   AnlVariant variant, const LabelSchema &schema);

// Abbreviated ID token of every component of `graph`, indexed by component
// id: schema ID prefix plus a per-type counter starting at 1.
std::vector<std::string> AssignIdTokens(const ArgGraph &graph,
                                        const LabelSchema &schema);

// Parses possibly malformed model output back into a graph over `text`.
// Never throws on bad input; every problem becomes a ParseError and the
// offending group is dropped.
ParseOutcome Decode(std::string_view target, const ArgText &text,
                    AnlVariant variant, const LabelSchema &schema);

// Decodes targets whose only groups are "[ span | marker ]" (the augmented
// marker format). Recovered spans land in graph.markers().
ParseOutcome DecodeMarkerGroups(std::string_view target, const ArgText &text);

// Removes bracket scaffolding, labels, relation segments and marker braces,
// keeping span text and the text between groups.
std::string StripSymbols(std::string_view target);

// {doc_id, variant, input, target}
nlohmann::json SequenceToJson(const AnlSequence &sequence);
AnlSequence SequenceFromJson(const nlohmann::json &record);

// {doc_id, components, relations, markers, errors:[{kind, detail, location}]}
nlohmann::json OutcomeToJson(const ParseOutcome &outcome);
ParseOutcome OutcomeFromJson(const nlohmann::json &record);

}  // namespace anlforge

#endif  // ANLFORGE_ANL_CODEC_H_
