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

#include "anlforge/graph.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "anlforge/errors.h"

namespace anlforge {

namespace {

std::string SpanString(TokenSpan s) {
  return "(" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

}  // namespace

ArgGraph::ArgGraph(std::string doc_id, std::vector<ArgComponent> components,
                   std::vector<ArgRelation> relations,
                   std::vector<TokenSpan> markers)
    : doc_id_(std::move(doc_id)), markers_(std::move(markers)) {
  const int n = static_cast<int>(components.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(components[a].span, components[a].type) <
           std::tie(components[b].span, components[b].type);
  });
  std::vector<int> remap(n);
  components_.reserve(n);
  for (int pos = 0; pos < n; ++pos) {
    remap[order[pos]] = pos;
    ArgComponent c = std::move(components[order[pos]]);
    c.id = pos;
    components_.push_back(std::move(c));
  }
  relations_.reserve(relations.size());
  for (ArgRelation &r : relations) {
    // Dangling endpoints are kept as -1 so that Validate() can report them.
    r.head = (r.head >= 0 && r.head < n) ? remap[r.head] : -1;
    r.tail = (r.tail >= 0 && r.tail < n) ? remap[r.tail] : -1;
    relations_.push_back(std::move(r));
  }
  std::sort(relations_.begin(), relations_.end(),
            [](const ArgRelation &a, const ArgRelation &b) {
              return std::tie(a.head, a.tail, a.type) <
                     std::tie(b.head, b.tail, b.type);
            });
  std::sort(markers_.begin(), markers_.end());
}

ArgGraph ArgGraph::WithMarkers(std::vector<TokenSpan> markers) const {
  ArgGraph copy = *this;
  copy.markers_ = std::move(markers);
  std::sort(copy.markers_.begin(), copy.markers_.end());
  return copy;
}

std::vector<ArgRelation> ArgGraph::OutgoingRelations(int component) const {
  std::vector<ArgRelation> out;
  for (const ArgRelation &r : relations_) {
    if (r.head == component) out.push_back(r);
  }
  return out;
}

bool ArgGraph::IsForest() const {
  const int n = static_cast<int>(components_.size());
  std::vector<int> parent(n, -1);
  for (const ArgRelation &r : relations_) {
    if (r.head < 0 || r.head >= n) return false;
    if (parent[r.head] != -1) return false;
    parent[r.head] = r.tail;
  }
  for (int start = 0; start < n; ++start) {
    int steps = 0;
    for (int at = start; at != -1; at = parent[at]) {
      if (++steps > n) return false;
    }
  }
  return true;
}

void ArgGraph::Validate(const ArgText &text, const LabelSchema *schema) const {
  const int n = static_cast<int>(components_.size());
  for (const ArgComponent &c : components_) {
    if (c.span.start < 0 || c.span.end < c.span.start ||
        c.span.end >= text.size()) {
      throw ValidationError(doc_id_ + ": component span " +
                            SpanString(c.span) + " outside text of " +
                            std::to_string(text.size()) + " tokens");
    }
    if (schema != nullptr && !schema->HasComponentType(c.type)) {
      throw SchemaError(doc_id_ + ": unknown component type '" + c.type + "'");
    }
  }
  for (int i = 1; i < n; ++i) {
    if (components_[i - 1].span.Overlaps(components_[i].span)) {
      throw ValidationError(doc_id_ + ": overlapping component spans " +
                            SpanString(components_[i - 1].span) + " and " +
                            SpanString(components_[i].span));
    }
  }
  std::set<std::tuple<std::string, int, int>> triples;
  for (const ArgRelation &r : relations_) {
    if (r.head < 0 || r.head >= n || r.tail < 0 || r.tail >= n) {
      throw ValidationError(doc_id_ + ": dangling relation endpoint");
    }
    if (r.head == r.tail) {
      throw ValidationError(doc_id_ + ": relation from a component to itself");
    }
    if (schema != nullptr && !schema->HasRelationType(r.type)) {
      throw SchemaError(doc_id_ + ": unknown relation type '" + r.type + "'");
    }
    if (!triples.emplace(r.type, r.head, r.tail).second) {
      throw ValidationError(doc_id_ + ": duplicate relation " + r.type + " " +
                            std::to_string(r.head) + "->" +
                            std::to_string(r.tail));
    }
  }
  for (std::size_t i = 0; i < markers_.size(); ++i) {
    TokenSpan m = markers_[i];
    if (m.start < 0 || m.end < m.start || m.end >= text.size()) {
      throw ValidationError(doc_id_ + ": marker span " + SpanString(m) +
                            " outside text");
    }
    if (i > 0 && markers_[i - 1].Overlaps(m)) {
      throw ValidationError(doc_id_ + ": overlapping marker spans");
    }
    for (const ArgComponent &c : components_) {
      if (c.span.Overlaps(m)) {
        throw ValidationError(doc_id_ + ": marker span " + SpanString(m) +
                              " intersects component " + SpanString(c.span));
      }
    }
  }
}

}  // namespace anlforge
