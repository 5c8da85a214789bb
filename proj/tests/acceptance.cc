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

// Acceptance report: one PASS/FAIL/SKIP line per criterion. Exits non-zero
// when any criterion not listed in kKnownUnattainable fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "anlforge/anl_codec.h"
#include "anlforge/eval.h"
#include "anlforge/ingest.h"
#include "anlforge/markers.h"
#include "anlforge/mft.h"
#include "anlforge/pipeline.h"
#include "anlforge/synthetic.h"
#include "support/oracles.h"

namespace anlforge {
namespace {

// Pinned tolerances.
constexpr int kRoundTripPerVariant = 1000;
constexpr double kRoundTripSeconds = 60.0;
constexpr int kScorerInstances = 500;
constexpr int kMarkerInstances = 1000;
constexpr int kMutationDocs = 300;
constexpr int kAbbrDocs = 1000;
constexpr std::size_t kAaeParagraphs = 1833;
constexpr double kReductionTolerance = 3.0;
constexpr double kAaeReduction = 23.56;
constexpr double kAaeFgReduction = 23.01;
constexpr double kCdcpReduction = 16.45;

// Criteria that cannot hold as literally stated; see README.
const std::set<std::string> kKnownUnattainable = {"abbreviation-shorter-literal"};

const AnlVariant kVariants[] = {AnlVariant::kComponentOnly, AnlVariant::kAcre,
                                AnlVariant::kMeAcre, AnlVariant::kAbbreviated};

int unexpected_failures = 0;

void Report(const std::string &name, bool pass, const std::string &detail) {
  std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  if (!pass && !kKnownUnattainable.count(name)) ++unexpected_failures;
}

void Skip(const std::string &name, const std::string &detail) {
  std::cout << "SKIP " << name << ": " << detail << "\n";
}

int Words(const std::string &s) {
  std::istringstream in(s);
  int n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

void RoundTrip() {
  auto start = std::chrono::steady_clock::now();
  const char *schemas[] = {"aae", "aae-fg", "cdcp"};
  for (AnlVariant v : kVariants) {
    int total = 0, ok = 0;
    std::uint64_t seed = 1000;
    while (total < kRoundTripPerVariant) {
      for (bool tree : {true, false}) {
        for (const char *name : schemas) {
          LabelSchema schema = LabelSchema::ByName(name);
          SyntheticOptions options;
          options.tree = tree;
          SyntheticCorpus corpus(schema, options, ++seed);
          for (const Document &d : corpus.Generate(50)) {
            ParseOutcome o = Decode(Encode(d.graph, d.text, v, schema).target, d.text, v, schema);
            ++total;
            if (o.errors.empty() && o.graph == testing::ExpectedRoundTrip(d.graph, v)) ++ok;
          }
        }
      }
    }
    Report(std::string("round-trip-") + std::string(VariantName(v)), ok == total,
           std::to_string(ok) + "/" + std::to_string(total) + " exact with zero errors");
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Report("round-trip-time", seconds < kRoundTripSeconds,
         std::to_string(seconds) + " s (limit " + std::to_string(kRoundTripSeconds) + " s)");
}

void ReferenceRows() {
  Document d = testing::LeastSentenceDocument();
  const std::string sentence = "Last but not least, students have ... difficulties.";
  MftPair a = BuildAmkt(d.text, d.graph.markers());
  Report("reference-rows-amkt",
         a.input == sentence &&
             a.target == "[ Last but not least, | marker ] students have ... difficulties.",
         a.target);
  MftPair s = BuildSmmkt(d.text, d.graph.markers());
  Report("reference-rows-smmkt",
         s.input == "<extra_id_0> <extra_id_1> <extra_id_2> <extra_id_3> <extra_id_4> "
                    "students have ... difficulties." &&
             s.target == "<extra_id_0> Last <extra_id_1> but <extra_id_2> not <extra_id_3> "
                         "least <extra_id_4> , <extra_id_5>",
         s.target);
  MftPair e = BuildEmkt(d.text, d.graph.markers());
  Report("reference-rows-emkt", e.input == sentence && e.target == "[-1,-1,-1,-1,-1,0,0,0,0,0,0,0]",
         e.target);
  MftPair m = BuildDmkt({"Motivations for playing cricket are vastly different.",
                         "it is a well-crafted game.", "Truly,"});
  Report("reference-rows-dmkt",
         m.input == "Motivations for playing cricket are vastly different. It is a "
                    "well-crafted game." &&
             m.target == "Motivations for playing cricket are vastly different. Truly, it is "
                         "a well-crafted game.",
         m.target);
}

void ScorerOracle() {
  std::mt19937_64 rng(83);
  int agree = 0;
  for (int i = 0; i < kScorerInstances; ++i) {
    auto [gold, pred] = testing::RandomScoringInstance(rng, "d" + std::to_string(i));
    EvalReport r = Score({gold}, {ParseOutcome{pred, {}}});
    PrfCounts ace = testing::OracleAce({gold}, {pred});
    PrfCounts arc = testing::OracleArc({gold}, {pred});
    if (r.ace == ace && r.arc == arc && r.ace.f1() == testing::OracleF1(ace) &&
        r.arc.f1() == testing::OracleF1(arc)) {
      ++agree;
    }
  }
  Report("scorer-oracle", agree == kScorerInstances,
         std::to_string(agree) + "/" + std::to_string(kScorerInstances) +
             " instances exactly equal");
}

void ErrorTaxonomy() {
  using testing::MutationKind;
  LabelSchema aae = LabelSchema::Aae();
  std::mt19937_64 rng(17);
  const std::pair<const char *, MutationKind> kinds[] = {{"IF", MutationKind::kFormat},
                                                          {"IT", MutationKind::kToken},
                                                          {"IC", MutationKind::kComponent}};
  SyntheticCorpus corpus(aae, {}, 23);
  std::vector<Document> docs = corpus.Generate(kMutationDocs);
  for (const auto &[label, kind] : kinds) {
    int total = 0, agree = 0;
    for (AnlVariant v : kVariants) {
      for (const Document &d : docs) {
        auto m = testing::Mutate(d, v, aae, {kind}, rng);
        if (!m) continue;
        ++total;
        if (testing::ErrorKinds(Decode(m->target, d.text, v, aae)) == m->kinds) ++agree;
      }
    }
    Report(std::string("error-taxonomy-") + label, total > 0 && agree == total,
           std::to_string(agree) + "/" + std::to_string(total) + " mutations classified");
  }

  // Combined mutations: every sequence must count in each of its columns.
  SyntheticOptions options;
  options.min_components = 3;
  SyntheticCorpus mixed(aae, options, 31);
  int total = 0, agree = 0;
  std::vector<ParseOutcome> outcomes;
  std::map<ErrorKind, int> expected;
  for (const Document &d : mixed.Generate(kMutationDocs)) {
    for (AnlVariant v : {AnlVariant::kAcre, AnlVariant::kMeAcre, AnlVariant::kAbbreviated}) {
      std::set<MutationKind> subset = {MutationKind::kFormat, MutationKind::kToken,
                                       MutationKind::kComponent};
      // Drop one kind two times in three so the columns differ.
      int drop = std::uniform_int_distribution<int>(0, 2)(rng);
      if (drop < 2) subset.erase(static_cast<MutationKind>(rng() % 3));
      auto m = testing::Mutate(d, v, aae, subset, rng);
      if (!m) continue;
      ParseOutcome o = Decode(m->target, d.text, v, aae);
      ++total;
      if (testing::ErrorKinds(o) == m->kinds) ++agree;
      for (ErrorKind k : m->kinds) ++expected[k];
      outcomes.push_back(std::move(o));
    }
  }
  ErrorRates rates = ComputeErrorRates(outcomes);
  auto pct = [&](ErrorKind k) { return 100.0 * expected[k] / static_cast<double>(total); };
  bool columns = total > 0 && rates.invalid_token == pct(ErrorKind::kInvalidToken) &&
                 rates.invalid_component == pct(ErrorKind::kInvalidComponent) &&
                 rates.invalid_format == pct(ErrorKind::kInvalidFormat);
  Report("error-taxonomy-mixed", total > 0 && agree == total && columns,
         std::to_string(agree) + "/" + std::to_string(total) +
             " combined mutations classified; IT/IC/IF rates " +
             std::to_string(rates.invalid_token) + "/" + std::to_string(rates.invalid_component) +
             "/" + std::to_string(rates.invalid_format) + "%");
}

void Abbreviation() {
  int eligible = 0, shorter = 0, equal_graphs = 0, formula = 0, total = 0;
  for (const char *name : {"aae", "aae-fg", "cdcp"}) {
    LabelSchema schema = LabelSchema::ByName(name);
    for (bool tree : {true, false}) {
      SyntheticOptions options;
      options.tree = tree;
      SyntheticCorpus corpus(schema, options, tree ? 43 : 53);
      for (const Document &d : corpus.Generate(kAbbrDocs / 6 + 1)) {
        AnlSequence acre = Encode(d.graph, d.text, AnlVariant::kAcre, schema);
        AnlSequence abbr = Encode(d.graph, d.text, AnlVariant::kAbbreviated, schema);
        ParseOutcome a = Decode(acre.target, d.text, AnlVariant::kAcre, schema);
        ParseOutcome b = Decode(abbr.target, d.text, AnlVariant::kAbbreviated, schema);
        ++total;
        if (a.errors.empty() && b.errors.empty() && a.graph == b.graph) ++equal_graphs;
        int predicted = static_cast<int>(d.graph.components().size());
        bool long_tail = false;
        for (const ArgRelation &r : d.graph.relations()) {
          int tail = Words(SpanText(d.text, d.graph.components()[r.tail].span));
          predicted -= tail - 1;
          long_tail = long_tail || tail > 1;
        }
        if (Words(abbr.target) - Words(acre.target) == predicted) ++formula;
        if (long_tail) {
          ++eligible;
          if (Words(abbr.target) < Words(acre.target)) ++shorter;
        }
      }
    }
  }
  Report("abbreviation-same-graph", equal_graphs == total,
         std::to_string(equal_graphs) + "/" + std::to_string(total) +
             " documents decode identically from ACRE and ABBREVIATED");
  Report("abbreviation-shorter-literal", eligible > 0 && shorter == eligible,
         std::to_string(eligible - shorter) + "/" + std::to_string(eligible) +
             " eligible graphs are not shorter (each component gains an ID word; "
             "known unattainable as stated)");
  Report("abbreviation-length-formula", formula == total,
         std::to_string(formula) + "/" + std::to_string(total) +
             " documents change by #components - sum(tail words - 1)");
}

std::optional<std::string> Env(const char *name) {
  const char *v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

void RealCorpora() {
  auto reduction = [](const std::vector<Document> &docs, const LabelSchema &schema) {
    return ComputeLengthStats(EncodeCorpus(docs, AnlVariant::kAcre, schema, 4),
                              EncodeCorpus(docs, AnlVariant::kAbbreviated, schema, 4))
        .reduction_pct;
  };
  auto check_reduction = [](const std::string &name, double got, double want) {
    Report(name, std::abs(got - want) <= kReductionTolerance,
           std::to_string(got) + "% (target " + std::to_string(want) + " +/- " +
               std::to_string(kReductionTolerance) + ")");
  };
  if (auto dir = Env("ANLFORGE_AAE_DIR")) {
    IngestResult r = ReadStandoffCorpus(*dir, LabelSchema::Aae());
    Report("aae-paragraphs", r.docs.size() == kAaeParagraphs,
           std::to_string(r.docs.size()) + " paragraph records (target " +
               std::to_string(kAaeParagraphs) + ")");
    check_reduction("aae-abbreviation-reduction", reduction(r.docs, LabelSchema::Aae()),
                    kAaeReduction);
  } else {
    Skip("aae-paragraphs", "corpus unavailable (set ANLFORGE_AAE_DIR)");
    Skip("aae-abbreviation-reduction", "corpus unavailable (set ANLFORGE_AAE_DIR)");
  }
  auto fg_dir = Env("ANLFORGE_AAEFG_DIR");
  auto fg_labels = Env("ANLFORGE_AAEFG_LABELS");
  if (fg_dir && fg_labels) {
    IngestResult r = ReadStandoffCorpus(*fg_dir, LabelSchema::AaeFg(), *fg_labels);
    check_reduction("aaefg-abbreviation-reduction", reduction(r.docs, LabelSchema::AaeFg()),
                    kAaeFgReduction);
  } else {
    Skip("aaefg-abbreviation-reduction",
         "corpus unavailable (set ANLFORGE_AAEFG_DIR and ANLFORGE_AAEFG_LABELS)");
  }
  if (auto dir = Env("ANLFORGE_CDCP_DIR")) {
    IngestResult r = ReadCdcpCorpus(*dir);
    check_reduction("cdcp-abbreviation-reduction", reduction(r.docs, LabelSchema::Cdcp()),
                    kCdcpReduction);
  } else {
    Skip("cdcp-abbreviation-reduction", "corpus unavailable (set ANLFORGE_CDCP_DIR)");
  }
}

// Builds a document from "[...]"-delimited component spans.
Document Fixture(const std::string &marked) {
  std::string plain;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t open = 0;
  for (char c : marked) {
    if (c == '[') {
      open = plain.size();
    } else if (c == ']') {
      ranges.emplace_back(open, plain.size());
    } else {
      plain.push_back(c);
    }
  }
  ArgText text = Tokenize(plain, "fx");
  std::vector<ArgComponent> comps;
  for (auto [a, b] : ranges) {
    int s = -1, e = -1;
    for (int i = 0; i < text.size(); ++i) {
      if (text.token(i).char_start == a) s = i;
      if (text.token(i).char_end == b) e = i;
    }
    comps.push_back({0, "Premise", {s, e}});
  }
  return {text, ArgGraph("fx", comps, {})};
}

void Markers() {
  std::vector<Document> fixtures = {testing::ZooDocument()};
  for (const char *f : {
           "Last but not least, [students have difficulties] because [they lack time].",
           "[Zoos protect animals], and thus [species survive]. Furthermore, [we agree].",
           "[A claim] [another claim]. [Third one]. In my opinion, [the last one].",
           "Some context here. Therefore, [we conclude this]. Nothing else.",
           "However, [this runs. Into the next] sentence and [stops here].",
           "[One], [two] and also [three] but never [four].",
           "Just words. More words.",
       }) {
    fixtures.push_back(Fixture(f));
  }
  int exact = 0;
  for (const Document &d : fixtures) {
    if (testing::Keys(ExtractCandidates(d.graph, d.text)) ==
        testing::BruteForceCandidates(d.graph, d.text)) {
      ++exact;
    }
  }
  Report("marker-fixtures", exact == static_cast<int>(fixtures.size()),
         std::to_string(exact) + "/" + std::to_string(fixtures.size()) +
             " fixtures match the brute-force gap scan");

  SyntheticOptions options;
  options.marker_probability = 0.5;
  SyntheticCorpus corpus(LabelSchema::Aae(), options, 61);
  int clean = 0;
  for (const Document &d : corpus.Generate(kMarkerInstances)) {
    std::vector<MarkerCandidate> c = ExtractCandidates(d.graph, d.text);
    bool ok = testing::Keys(c) == testing::BruteForceCandidates(d.graph, d.text);
    for (const MarkerCandidate &m : c) {
      for (const ArgComponent &comp : d.graph.components()) ok = ok && !m.span.Overlaps(comp.span);
    }
    if (ok) ++clean;
  }
  Report("marker-non-intersection", clean == kMarkerInstances,
         std::to_string(clean) + "/" + std::to_string(kMarkerInstances) +
             " instances disjoint from components and equal to brute force");
}

}  // namespace
}  // namespace anlforge

int main() {
  using namespace anlforge;
  RoundTrip();
  ReferenceRows();
  ScorerOracle();
  ErrorTaxonomy();
  Abbreviation();
  RealCorpora();
  Markers();
  std::cout << (unexpected_failures == 0 ? "acceptance: ok" : "acceptance: failures") << " ("
            << unexpected_failures << " unexpected)\n";
  return unexpected_failures == 0 ? 0 : 1;
}
