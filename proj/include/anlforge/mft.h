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

#ifndef ANLFORGE_MFT_H_
#define ANLFORGE_MFT_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "anlforge/ingest.h"
#include "anlforge/text.h"

namespace anlforge {

// Marker-based fine-tuning data, built before the main target format is
// learned.
//
//   kAmkt   markers bracketed: "[ Last but not least, | marker ] ..."
//   kSmmkt  marker tokens masked with sentinels, target lists them
//   kEmkt   per-token sequence, -1 on marker tokens and 0 elsewhere
//   kDmkt   discourse marker re-inserted between two sentences
enum class MftStrategy { kAmkt, kSmmkt, kEmkt, kDmkt };

// "amkt", "smmkt", "emkt", "dmkt".
std::string_view StrategyName(MftStrategy strategy);
MftStrategy ParseStrategy(std::string_view name);

struct MftPair {
  MftStrategy strategy;
  std::string input;
  std::string target;

  bool operator==(const MftPair &) const = default;
};

inline constexpr int kDefaultSentinelBudget = 100;

// Each builder throws ValidationError when marker spans overlap or leave the
// text.
MftPair BuildAmkt(const ArgText &text, const std::vector<TokenSpan> &markers);

// Sentinel indices restart at 0 for every call (one paragraph). Throws
// CapacityError when the closing sentinel index would reach `budget`.
MftPair BuildSmmkt(const ArgText &text, const std::vector<TokenSpan> &markers,
                   int budget = kDefaultSentinelBudget);

// Target printed as "[-1,-1,0,...]".
MftPair BuildEmkt(const ArgText &text, const std::vector<TokenSpan> &markers);

// Input: sen1 + " " + sen2 with its first letter uppercased. Target: sen1,
// the connective, then sen2 with its first letter lowercased unless the
// leading word looks like a proper noun (it also appears capitalized
// mid-sentence in the pair, or is "I").
MftPair BuildDmkt(const DmPair &pair);

nlohmann::json MftPairToJson(const MftPair &pair);

}  // namespace anlforge

#endif  // ANLFORGE_MFT_H_
