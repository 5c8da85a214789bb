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

#include "anlforge/schema.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "anlforge/errors.h"

namespace anlforge {

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Uppercased letters and digits of a type name.
std::string IdAlphabet(std::string_view type) {
  std::string out;
  for (char c : type) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalpha(u)) out.push_back(static_cast<char>(std::toupper(u)));
  }
  return out;
}

void CheckLabels(const std::vector<std::string> &labels, const char *what) {
  if (labels.empty()) {
    throw SchemaError(std::string("empty ") + what + " type set");
  }
  std::set<std::string> seen;
  for (const std::string &label : labels) {
    if (label.empty() || label.front() == ' ' || label.back() == ' ') {
      throw SchemaError(std::string("malformed ") + what + " type '" + label +
                        "'");
    }
    if (label.find_first_of("[]|=") != std::string::npos ||
        label.find("((") != std::string::npos ||
        label.find("))") != std::string::npos ||
        Lower(label) == SymbolSet::kMarkerLabel) {
      throw SchemaError(std::string(what) + " type '" + label +
                        "' uses a reserved symbol");
    }
    if (!seen.insert(Lower(label)).second) {
      throw SchemaError(std::string("duplicate ") + what + " type '" + label +
                        "'");
    }
  }
}

}  // namespace

std::string SymbolSet::Sentinel(int index) {
  return std::string(kSentinelPrefix) + std::to_string(index) + ">";
}

LabelSchema::LabelSchema(std::string name,
                         std::vector<std::string> component_types,
                         std::vector<std::string> relation_types)
    : name_(std::move(name)),
      component_types_(std::move(component_types)),
      relation_types_(std::move(relation_types)) {
  CheckLabels(component_types_, "component");
  CheckLabels(relation_types_, "relation");

  std::vector<std::string> alphabets;
  for (const std::string &t : component_types_) {
    alphabets.push_back(IdAlphabet(t));
    if (alphabets.back().empty()) {
      throw SchemaError("component type '" + t + "' has no letters for an ID");
    }
  }
  for (std::size_t i = 0; i < alphabets.size(); ++i) {
    std::size_t length = 1;
    for (std::size_t j = 0; j < alphabets.size(); ++j) {
      if (i == j) continue;
      const std::string &a = alphabets[i];
      const std::string &b = alphabets[j];
      if (a == b) {
        throw SchemaError("component types '" + component_types_[i] +
                          "' and '" + component_types_[j] +
                          "' cannot be told apart by ID prefix");
      }
      std::size_t common = 0;
      while (common < a.size() && common < b.size() && a[common] == b[common]) {
        ++common;
      }
      length = std::max(length, common + 1);
    }
    id_prefixes_.push_back(alphabets[i].substr(0, length));
  }
}

LabelSchema LabelSchema::Aae() {
  return LabelSchema("aae", {"MajorClaim", "Claim", "Premise"},
                     {"Support", "Attack"});
}

LabelSchema LabelSchema::AaeFg() {
  return LabelSchema("aae-fg",
                     {"Fact", "Value", "Policy", "Common Ground", "Testimony",
                      "Hypothetical Instance", "Statistics", "Real Example",
                      "Others"},
                     {"Support", "Attack"});
}

LabelSchema LabelSchema::Cdcp() {
  return LabelSchema("cdcp", {"Fact", "Testimony", "Reference", "Policy", "Value"},
                     {"Reason", "Evidence"});
}

LabelSchema LabelSchema::ByName(std::string_view name) {
  std::string key = Lower(name);
  if (key == "aae") return Aae();
  if (key == "aae-fg" || key == "aaefg") return AaeFg();
  if (key == "cdcp") return Cdcp();
  throw SchemaError("unknown schema '" + std::string(name) + "'");
}

bool LabelSchema::HasComponentType(std::string_view type) const {
  return std::find(component_types_.begin(), component_types_.end(), type) !=
         component_types_.end();
}

bool LabelSchema::HasRelationType(std::string_view type) const {
  return std::find(relation_types_.begin(), relation_types_.end(), type) !=
         relation_types_.end();
}

const std::string &LabelSchema::IdPrefix(std::string_view type) const {
  auto it = std::find(component_types_.begin(), component_types_.end(), type);
  if (it == component_types_.end()) {
    throw SchemaError("unknown component type '" + std::string(type) + "'");
  }
  return id_prefixes_[it - component_types_.begin()];
}

}  // namespace anlforge
