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

#include "anlforge/mft.h"

#include <algorithm>
#include <cctype>

#include "anlforge/errors.h"
#include "anlforge/schema.h"

namespace anlforge {

namespace {

std::vector<TokenSpan> CheckedMarkers(const ArgText &text,
                                      std::vector<TokenSpan> markers) {
  std::sort(markers.begin(), markers.end());
  for (std::size_t i = 0; i < markers.size(); ++i) {
    const TokenSpan &m = markers[i];
    if (m.start < 0 || m.end < m.start || m.end >= text.size()) {
      throw ValidationError(text.doc_id() + ": marker span outside text");
    }
    if (i > 0 && markers[i - 1].Overlaps(m)) {
      throw ValidationError(text.doc_id() + ": overlapping marker spans");
    }
  }
  return markers;
}

// Rewrites every marker span with `render` and copies the rest verbatim.
template <typename Render>
std::string Rewrite(const ArgText &text, const std::vector<TokenSpan> &markers,
                    Render render) {
  const std::string &raw = text.text();
  std::string out;
  std::size_t cursor = 0;
  for (const TokenSpan &m : markers) {
    std::size_t begin = text.token(m.start).char_start;
    out.append(raw, cursor, begin - cursor);
    out += render(m);
    cursor = text.token(m.end).char_end;
  }
  out.append(raw, cursor, std::string::npos);
  return out;
}

std::size_t FirstAlpha(const std::string &s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(s[i]))) return i;
  }
  return std::string::npos;
}

bool IsTerminal(const std::string &s) { return s == "." || s == "!" || s == "?"; }

bool LooksLikeProperNoun(const DmPair &pair) {
  std::vector<std::string> sen2 = TokenSurfaces(pair.sen2);
  if (sen2.empty()) return false;
  std::string word = sen2[0];
  std::size_t alpha = FirstAlpha(word);
  if (alpha == std::string::npos) return false;
  word[alpha] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[alpha])));
  if (word == "I" || word.rfind("I'", 0) == 0) return true;
  auto capitalized_inside = [&](const std::vector<std::string> &tokens,
                                std::size_t from) {
    for (std::size_t i = std::max<std::size_t>(from, 1); i < tokens.size(); ++i) {
      if (tokens[i] == word && !IsTerminal(tokens[i - 1])) return true;
    }
    return false;
  };
  return capitalized_inside(TokenSurfaces(pair.sen1), 1) ||
         capitalized_inside(sen2, 1);
}

}  // namespace

std::string_view StrategyName(MftStrategy strategy) {
  switch (strategy) {
    case MftStrategy::kAmkt: return "amkt";
    case MftStrategy::kSmmkt: return "smmkt";
    case MftStrategy::kEmkt: return "emkt";
    case MftStrategy::kDmkt: return "dmkt";
  }
  return "amkt";
}

MftStrategy ParseStrategy(std::string_view name) {
  if (name == "amkt") return MftStrategy::kAmkt;
  if (name == "smmkt") return MftStrategy::kSmmkt;
  if (name == "emkt") return MftStrategy::kEmkt;
  if (name == "dmkt") return MftStrategy::kDmkt;
  throw SchemaError("unknown strategy '" + std::string(name) +
                    "' (expected amkt, smmkt, emkt or dmkt)");
}

MftPair BuildAmkt(const ArgText &text, const std::vector<TokenSpan> &markers) {
  std::vector<TokenSpan> spans = CheckedMarkers(text, markers);
  std::string target = Rewrite(text, spans, [&](const TokenSpan &m) {
    return "[ " + SpanText(text, m) + " | " +
           std::string(SymbolSet::kMarkerLabel) + " ]";
  });
  return {MftStrategy::kAmkt, text.text(), std::move(target)};
}

MftPair BuildSmmkt(const ArgText &text, const std::vector<TokenSpan> &markers,
                   int budget) {
  std::vector<TokenSpan> spans = CheckedMarkers(text, markers);
  int masked = 0;
  for (const TokenSpan &m : spans) masked += m.length();
  if (masked >= budget) {
    throw CapacityError(text.doc_id() + ": " + std::to_string(masked + 1) +
                        " sentinels needed, only " + std::to_string(budget) +
                        " available");
  }
  int next = 0;
  std::string target;
  std::string input = Rewrite(text, spans, [&](const TokenSpan &m) {
    std::string masks;
    for (int i = m.start; i <= m.end; ++i) {
      std::string sentinel = SymbolSet::Sentinel(next++);
      if (!masks.empty()) masks += ' ';
      masks += sentinel;
      target += sentinel + " " + text.token(i).surface + " ";
    }
    return masks;
  });
  target += SymbolSet::Sentinel(next);
  return {MftStrategy::kSmmkt, std::move(input), std::move(target)};
}

MftPair BuildEmkt(const ArgText &text, const std::vector<TokenSpan> &markers) {
  std::vector<TokenSpan> spans = CheckedMarkers(text, markers);
  std::vector<int> labels(text.size(), 0);
  for (const TokenSpan &m : spans) {
    for (int i = m.start; i <= m.end; ++i) labels[i] = -1;
  }
  std::string target = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) target += ',';
    target += std::to_string(labels[i]);
  }
  target += "]";
  return {MftStrategy::kEmkt, text.text(), std::move(target)};
}

MftPair BuildDmkt(const DmPair &pair) {
  std::string upper = pair.sen2;
  std::size_t alpha = FirstAlpha(upper);
  if (alpha != std::string::npos) {
    upper[alpha] = static_cast<char>(std::toupper(static_cast<unsigned char>(upper[alpha])));
  }
  std::string input = pair.sen1 + " " + upper;
  if (pair.dm.empty()) return {MftStrategy::kDmkt, input, input};

  const bool proper = LooksLikeProperNoun(pair);
  std::string rest = proper ? upper : pair.sen2;
  if (!proper && alpha != std::string::npos) {
    rest[alpha] = static_cast<char>(std::tolower(static_cast<unsigned char>(rest[alpha])));
  }
  return {MftStrategy::kDmkt, std::move(input),
          pair.sen1 + " " + pair.dm + " " + rest};
}

nlohmann::json MftPairToJson(const MftPair &pair) {
  return {{"strategy", StrategyName(pair.strategy)},
          {"input", pair.input},
          {"target", pair.target}};
}

}  // namespace anlforge
