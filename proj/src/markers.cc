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

#include "anlforge/markers.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "anlforge/errors.h"
#include "anlforge/record.h"

namespace anlforge {

using nlohmann::json;

namespace {

std::string KeyOfTokens(const ArgText &text, int start, int end) {
  std::string key;
  for (int i = start; i <= end; ++i) {
    if (i > start) key.push_back(' ');
    for (char c : text.token(i).surface) {
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return key;
}

bool TouchesComponent(const ArgGraph &graph, TokenSpan span) {
  return std::any_of(graph.components().begin(), graph.components().end(),
                     [&](const ArgComponent &c) { return c.span.Overlaps(span); });
}

}  // namespace

std::string_view CandidateKindName(CandidateKind kind) {
  return kind == CandidateKind::kLeading ? "leading" : "sandwich";
}

std::vector<MarkerCandidate> ExtractCandidates(const ArgGraph &graph,
                                               const ArgText &text) {
  std::vector<MarkerCandidate> out;
  const auto &comps = graph.components();
  auto emit = [&](CandidateKind kind, TokenSpan span) {
    if (span.end < span.start || TouchesComponent(graph, span)) return;
    out.push_back({SpanText(text, span), kind, text.doc_id(), span});
  };

  for (const TokenSpan &sentence : text.sentences()) {
    for (const ArgComponent &c : comps) {
      if (sentence.Contains(c.span.start)) {
        emit(CandidateKind::kLeading, {sentence.start, c.span.start - 1});
        break;
      }
    }
  }
  for (std::size_t i = 1; i < comps.size(); ++i) {
    const TokenSpan &left = comps[i - 1].span;
    const TokenSpan &right = comps[i].span;
    if (text.SentenceOf(left.end) != text.SentenceOf(right.start)) continue;
    emit(CandidateKind::kSandwich, {left.end + 1, right.start - 1});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MarkerCandidate &a, const MarkerCandidate &b) {
                     return a.span < b.span;
                   });
  return out;
}

std::string NormalizeMarker(std::string_view surface) {
  std::string key;
  for (const std::string &token : TokenSurfaces(surface)) {
    if (!key.empty()) key.push_back(' ');
    for (char c : token) {
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return key;
}

bool MarkerLexicon::Add(std::string_view surface, std::vector<std::string> *into,
                        std::set<std::string> *keys) {
  std::string key = NormalizeMarker(surface);
  if (key.empty() || filter_keys_.count(key) != 0) return false;
  if (!keys->insert(key).second) return false;
  into->emplace_back(surface);
  keys_.insert(key);
  max_tokens_ = std::max(max_tokens_, static_cast<int>(TokenSurfaces(surface).size()));
  return true;
}

bool MarkerLexicon::AddArgumentative(std::string_view surface) {
  return Add(surface, &argumentative_, &argumentative_keys_);
}

bool MarkerLexicon::AddDiscourse(std::string_view surface) {
  return Add(surface, &discourse_, &discourse_keys_);
}

void MarkerLexicon::AddFilter(std::string_view surface) {
  std::string key = NormalizeMarker(surface);
  if (key.empty()) return;
  filter_keys_.insert(key);
  // Keep argumentative ∩ filter empty even when filters arrive late.
  if (argumentative_keys_.erase(key) != 0) {
    std::erase_if(argumentative_, [&](const std::string &s) {
      return NormalizeMarker(s) == key;
    });
    if (discourse_keys_.count(key) == 0) keys_.erase(key);
  }
}

bool MarkerLexicon::Contains(std::string_view surface) const {
  return keys_.count(NormalizeMarker(surface)) != 0;
}

json MarkerLexicon::ToJson() const {
  return {{"argumentative", argumentative_}, {"discourse", discourse_}};
}

MarkerLexicon MarkerLexicon::FromJson(const json &record) {
  MarkerLexicon lexicon;
  try {
    for (const json &s : record.value("argumentative", json::array())) {
      lexicon.AddArgumentative(s.get<std::string>());
    }
    for (const json &s : record.value("discourse", json::array())) {
      lexicon.AddDiscourse(s.get<std::string>());
    }
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed lexicon: ") + e.what());
  }
  return lexicon;
}

MarkerLexicon BuildLexicon(const std::vector<std::string> &candidates,
                           const std::vector<std::string> &filter_list,
                           LexiconStats *stats) {
  MarkerLexicon lexicon;
  for (const std::string &f : filter_list) lexicon.AddFilter(f);
  LexiconStats local;
  for (const std::string &c : candidates) {
    ++local.raw_candidates;
    if (lexicon.filter_list().count(NormalizeMarker(c)) != 0) {
      ++local.filtered;
      continue;
    }
    lexicon.AddArgumentative(c);
  }
  local.unique = static_cast<int>(lexicon.argumentative().size());
  if (stats != nullptr) *stats = local;
  return lexicon;
}

ArgGraph AnnotateMarkers(const ArgGraph &graph, const ArgText &text,
                         const MarkerLexicon &lexicon) {
  std::vector<TokenSpan> markers;
  if (!lexicon.empty()) {
    for (const MarkerCandidate &gap : ExtractCandidates(graph, text)) {
      int i = gap.span.start;
      while (i <= gap.span.end) {
        int longest = std::min(lexicon.max_tokens(), gap.span.end - i + 1);
        int found = 0;
        for (int length = longest; length >= 1; --length) {
          if (lexicon.ContainsKey(KeyOfTokens(text, i, i + length - 1))) {
            found = length;
            break;
          }
        }
        if (found > 0) {
          markers.push_back({i, i + found - 1});
          i += found;
        } else {
          ++i;
        }
      }
    }
  }
  return graph.WithMarkers(std::move(markers));
}

std::vector<std::string> ReadFilterList(const std::filesystem::path &path) {
  std::vector<std::string> out;
  std::istringstream in(ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t lead = line.find_first_not_of(' ');
    if (lead == std::string::npos || line[lead] == '#') continue;
    out.push_back(line.substr(lead));
  }
  return out;
}

void WriteCandidatesTsv(const std::filesystem::path &path,
                        const std::vector<MarkerCandidate> &candidates) {
  std::string content;
  for (const MarkerCandidate &c : candidates) {
    std::string surface = c.surface;
    std::replace(surface.begin(), surface.end(), '\t', ' ');
    std::replace(surface.begin(), surface.end(), '\n', ' ');
    content += c.doc_id + "\t" + std::string(CandidateKindName(c.kind)) + "\t" +
               std::to_string(c.span.start) + "\t" + std::to_string(c.span.end) +
               "\t" + surface + "\n";
  }
  WriteFile(path, content);
}

std::vector<MarkerCandidate> ReadCandidatesTsv(const std::filesystem::path &path) {
  std::vector<MarkerCandidate> out;
  std::istringstream in(ReadFile(path));
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
      std::size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) break;
      f.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (f.size() != 4) {
      throw IoError(path.string() + ":" + std::to_string(number) +
                    ": expected 5 tab-separated fields");
    }
    MarkerCandidate c;
    c.doc_id = f[0];
    c.kind = f[1] == "leading" ? CandidateKind::kLeading : CandidateKind::kSandwich;
    c.span = {std::stoi(f[2]), std::stoi(f[3])};
    c.surface = line.substr(pos);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace anlforge
