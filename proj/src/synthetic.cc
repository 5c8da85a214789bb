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

#include "anlforge/synthetic.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <tuple>
#include <utility>

namespace anlforge {

namespace {

const std::vector<std::string> &Vocabulary() {
  static const std::vector<std::string> words = {
      "zoos",      "animals",   "students",  "teachers",  "cities",
      "people",    "governments", "schools", "technology", "children",
      "money",     "education", "sports",    "museums",   "public",
      "transport", "health",    "online",    "degrees",   "would",
      "should",    "could",     "provide",   "improve",   "reduce",
      "better",    "care",      "safety",    "freedom",   "knowledge",
      "skills",    "society",   "economy",   "families",  "workers",
      "the",       "a",         "their",     "many",      "most",
      "every",     "some",      "more",      "less",      "new",
      "modern",    "local",     "global",    "endangered", "species",
      "never",     "always",    "often",     "protect",   "support",
      "learn",     "teach",     "build",     "encourage", "limit",
      "well-known", "long-term", "everyone's", "cooperation", "competition"};
  return words;
}

const std::vector<std::string> &SandwichPhrases() {
  static const std::vector<std::string> phrases = {"because", "since",
                                                   "so that", "and thus"};
  return phrases;
}

const std::vector<std::string> &LeadingFillers() {
  static const std::vector<std::string> fillers = {"Clearly", "Some say",
                                                   "Today"};
  return fillers;
}

const std::vector<std::string> &TrailingFillers() {
  static const std::vector<std::string> fillers = {
      ", in many cases", "in general", ", at least in principle"};
  return fillers;
}

std::string Capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

// Accumulates text pieces while tracking token indices.
class TextBuilder {
 public:
  TokenSpan Append(const std::string &piece, bool space_before = true) {
    if (!text_.empty() && space_before && piece.front() != ',') text_ += ' ';
    text_ += piece;
    int count = static_cast<int>(TokenSurfaces(piece).size());
    TokenSpan span{tokens_, tokens_ + count - 1};
    tokens_ += count;
    return span;
  }
  const std::string &text() const { return text_; }

 private:
  std::string text_;
  int tokens_ = 0;
};

}  // namespace

const std::vector<std::string> &SyntheticCorpus::MarkerPhrases() {
  static const std::vector<std::string> phrases = {
      "However,",          "Last but not least,", "In my opinion,",
      "Furthermore,",      "First of all,",       "I strongly agree that",
      "Therefore,",        "For example,",        "But, I deny the point that"};
  return phrases;
}

SyntheticCorpus::SyntheticCorpus(LabelSchema schema, SyntheticOptions options,
                                 std::uint64_t seed)
    : schema_(std::move(schema)), options_(options), rng_(seed) {}

std::string SyntheticCorpus::Word() {
  const auto &words = Vocabulary();
  return words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng_)];
}

Document SyntheticCorpus::Next(const std::string &doc_id) {
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  };
  auto chance = [&](double p) {
    return std::bernoulli_distribution(p)(rng_);
  };
  auto pick = [&](const std::vector<std::string> &from) -> const std::string & {
    return from[uniform(0, static_cast<int>(from.size()) - 1)];
  };

  const int n = uniform(options_.min_components, options_.max_components);
  TextBuilder builder;
  std::vector<ArgComponent> components;
  std::vector<TokenSpan> markers;
  std::set<std::vector<std::string>> surfaces;

  auto component_text = [&](bool capitalize) {
    for (;;) {
      int length = uniform(options_.min_span_tokens, options_.max_span_tokens);
      std::string s;
      for (int i = 0; i < length; ++i) {
        if (i > 0) s += (i == 2 && length >= 4 && chance(0.2)) ? ", " : " ";
        s += Word();
      }
      if (capitalize) s = Capitalize(s);
      if (surfaces.insert(TokenSurfaces(s)).second) return s;
    }
  };
  auto add_component = [&](bool capitalize) {
    TokenSpan span = builder.Append(component_text(capitalize));
    const auto &types = schema_.component_types();
    components.push_back({0, types[uniform(0, static_cast<int>(types.size()) - 1)], span});
  };

  int placed = 0;
  // Component-free sentences keep some paragraphs from being all ACs.
  if (n == 0 || chance(0.2)) {
    builder.Append(Capitalize(Word()) + " " + Word() + " " + Word());
    builder.Append(".", false);
  }
  while (placed < n) {
    bool capitalize = true;
    double roll = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (roll < options_.marker_probability) {
      TokenSpan span = builder.Append(pick(MarkerPhrases()));
      if (options_.annotate_markers) markers.push_back(span);
      capitalize = false;
    } else if (roll < options_.marker_probability + 0.15) {
      builder.Append(pick(LeadingFillers()));
      capitalize = false;
    }
    add_component(capitalize);
    ++placed;
    if (placed < n && chance(0.4)) {
      TokenSpan span = builder.Append(pick(SandwichPhrases()));
      if (options_.annotate_markers) markers.push_back(span);
      add_component(false);
      ++placed;
    }
    if (chance(0.3)) builder.Append(pick(TrailingFillers()));
    builder.Append(".", false);
  }

  std::vector<ArgRelation> relations;
  const auto &rtypes = schema_.relation_types();
  auto rtype = [&]() { return rtypes[uniform(0, static_cast<int>(rtypes.size()) - 1)]; };
  if (options_.tree) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    for (int k = 1; k < n; ++k) {
      if (!chance(options_.attach_probability)) continue;
      relations.push_back({rtype(), order[k], order[uniform(0, k - 1)]});
    }
  } else if (n >= 2) {
    int wanted = uniform(0, options_.max_relations);
    std::set<std::tuple<std::string, int, int>> seen;
    for (int attempt = 0; attempt < 50 && static_cast<int>(relations.size()) < wanted;
         ++attempt) {
      int head = uniform(0, n - 1);
      int tail = uniform(0, n - 1);
      std::string type = rtype();
      if (head == tail || !seen.emplace(type, head, tail).second) continue;
      relations.push_back({type, head, tail});
    }
  }

  ArgText text = Tokenize(builder.text(), doc_id);
  ArgGraph graph(doc_id, std::move(components), std::move(relations),
                 std::move(markers));
  graph.Validate(text, &schema_);
  return {std::move(text), std::move(graph)};
}

std::vector<Document> SyntheticCorpus::Generate(int count,
                                                const std::string &prefix) {
  std::vector<Document> docs;
  docs.reserve(count);
  for (int i = 0; i < count; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "%s%05d", prefix.c_str(), i);
    docs.push_back(Next(id));
  }
  return docs;
}

void WriteStandoffCorpus(const std::filesystem::path &dir,
                         const std::vector<Document> &docs,
                         int paragraphs_per_essay) {
  std::filesystem::create_directories(dir);
  const int per = std::max(1, paragraphs_per_essay);
  for (std::size_t first = 0, essay = 1; first < docs.size();
       first += per, ++essay) {
    char stem[32];
    std::snprintf(stem, sizeof(stem), "essay%03zu", essay);
    std::string body = "Synthetic essay number " + std::to_string(essay) + "\n\n";
    std::string ann;
    int t_index = 0;
    int r_index = 0;
    for (std::size_t d = first; d < std::min(docs.size(), first + per); ++d) {
      if (d > first) body += "\n\n";
      const std::size_t offset = body.size();
      const Document &doc = docs[d];
      body += doc.text.text();
      const int base = t_index;
      for (const ArgComponent &c : doc.graph.components()) {
        std::size_t cs = offset + doc.text.token(c.span.start).char_start;
        std::size_t ce = offset + doc.text.token(c.span.end).char_end;
        ann += "T" + std::to_string(++t_index) + "\t" + c.type + " " +
               std::to_string(cs) + " " + std::to_string(ce) + "\t" +
               SpanText(doc.text, c.span) + "\n";
      }
      for (const ArgRelation &r : doc.graph.relations()) {
        std::string name = r.type;
        for (char &ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        ann += "R" + std::to_string(++r_index) + "\t" + name + "s Arg1:T" +
               std::to_string(base + r.head + 1) + " Arg2:T" +
               std::to_string(base + r.tail + 1) + "\n";
      }
    }
    body += "\n";
    WriteFile(dir / (std::string(stem) + ".txt"), body);
    WriteFile(dir / (std::string(stem) + ".ann"), ann);
  }
}

}  // namespace anlforge
