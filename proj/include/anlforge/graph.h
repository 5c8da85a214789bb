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

#ifndef ANLFORGE_GRAPH_H_
#define ANLFORGE_GRAPH_H_

#include <compare>
#include <string>
#include <vector>

#include "anlforge/schema.h"
#include "anlforge/text.h"

namespace anlforge {

struct ArgComponent {
  // Position of the component in document order; assigned by ArgGraph.
  int id = 0;
  std::string type;
  TokenSpan span;

  auto operator<=>(const ArgComponent &) const = default;
};

struct ArgRelation {
  std::string type;
  int head = 0;
  int tail = 0;

  auto operator<=>(const ArgRelation &) const = default;
};

// Typed components and relations over one ArgText.
//
// The constructor canonicalizes: components are sorted by span start and
// renumbered 0..n-1, relation endpoints are remapped accordingly, and
// relations and markers are sorted. Relation endpoints given to the
// constructor are indices into the `components` argument as passed in.
// Structural checks live in Validate().
class ArgGraph {
 public:
  ArgGraph() = default;
  ArgGraph(std::string doc_id, std::vector<ArgComponent> components,
           std::vector<ArgRelation> relations,
           std::vector<TokenSpan> markers = {});

  const std::string &doc_id() const { return doc_id_; }
  const std::vector<ArgComponent> &components() const { return components_; }
  const std::vector<ArgRelation> &relations() const { return relations_; }
  const std::vector<TokenSpan> &markers() const { return markers_; }

  // Copy with a different marker set.
  ArgGraph WithMarkers(std::vector<TokenSpan> markers) const;

  // Relations whose head is `component`, in tail document order.
  std::vector<ArgRelation> OutgoingRelations(int component) const;

  // True when every component has at most one outgoing relation and the
  // relation structure has no cycle.
  bool IsForest() const;

  // Throws ValidationError on: spans outside the text, overlapping component
  // spans, dangling or self-referencing relations, duplicate relation
  // triples, overlapping markers, markers intersecting a component. With a
  // schema, unknown labels raise SchemaError.
  void Validate(const ArgText &text, const LabelSchema *schema = nullptr) const;

  bool operator==(const ArgGraph &) const = default;

 private:
  std::string doc_id_;
  std::vector<ArgComponent> components_;
  std::vector<ArgRelation> relations_;
  std::vector<TokenSpan> markers_;
};

}  // namespace anlforge

#endif  // ANLFORGE_GRAPH_H_
