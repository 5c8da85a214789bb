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

#ifndef ANLFORGE_SCHEMA_H_
#define ANLFORGE_SCHEMA_H_

#include <string>
#include <string_view>
#include <vector>

namespace anlforge {

// Symbol tokens of the augmented natural language.
struct SymbolSet {
  static constexpr std::string_view kOpen = "[";
  static constexpr std::string_view kClose = "]";
  static constexpr std::string_view kAssign = "=";
  static constexpr std::string_view kSep = "|";
  static constexpr std::string_view kMarkerOpen = "((";
  static constexpr std::string_view kMarkerClose = "))";
  static constexpr std::string_view kMarkerLabel = "marker";
  static constexpr std::string_view kSentinelPrefix = "<extra_id_";

  // "<extra_id_N>".
  static std::string Sentinel(int index);
};

// Ordered component and relation type inventories of one corpus.
class LabelSchema {
 public:
  // Throws SchemaError if either list is empty, has duplicates, or uses a
  // reserved symbol.
  LabelSchema(std::string name, std::vector<std::string> component_types,
              std::vector<std::string> relation_types);

  static LabelSchema Aae();
  static LabelSchema AaeFg();
  static LabelSchema Cdcp();
  // "aae", "aae-fg" or "cdcp" (case-insensitive).
  static LabelSchema ByName(std::string_view name);

  const std::string &name() const { return name_; }
  const std::vector<std::string> &component_types() const {
    return component_types_;
  }
  const std::vector<std::string> &relation_types() const {
    return relation_types_;
  }
  int num_component_types() const {
    return static_cast<int>(component_types_.size());
  }
  int num_relation_types() const {
    return static_cast<int>(relation_types_.size());
  }

  bool HasComponentType(std::string_view type) const;
  bool HasRelationType(std::string_view type) const;

  // Prefix used for abbreviated ID tokens of a component type: the shortest
  // uppercased prefix of the type that no other type of the schema shares.
  // Throws SchemaError for unknown types.
  const std::string &IdPrefix(std::string_view type) const;

 private:
  std::string name_;
  std::vector<std::string> component_types_;
  std::vector<std::string> relation_types_;
  std::vector<std::string> id_prefixes_;
};

}  // namespace anlforge

#endif  // ANLFORGE_SCHEMA_H_
