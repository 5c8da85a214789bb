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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "anlforge/anl_codec.h"
#include "anlforge/errors.h"
#include "anlforge/synthetic.h"
#include "support/oracles.h"

namespace anlforge {
namespace {

using testing::ErrorKinds;
using testing::ExpectedRoundTrip;
using testing::Mutate;
using testing::MutationKind;

const AnlVariant kVariants[] = {AnlVariant::kComponentOnly, AnlVariant::kAcre,
                                AnlVariant::kMeAcre, AnlVariant::kAbbreviated};

int Words(const std::string &s) {
  std::istringstream in(s);
  int n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

TEST(EncodeTest, ZooParagraphInEveryVariant) {
  Document zoo = testing::ZooDocument();
  LabelSchema aae = LabelSchema::Aae();
  const std::string claim =
      "zoos, which are equipped with modern facilities and professionals, would "
      "provide better care for the animals inside";
  const std::string premise =
      "the endangered species preserved in zoos would never die of illegal hunting";
  EXPECT_EQ(Encode(zoo.graph, zoo.text, AnlVariant::kComponentOnly, aae).target,
            "First of all, [ " + claim + " | Claim ], since [ " + premise + " | Premise ].");
  EXPECT_EQ(Encode(zoo.graph, zoo.text, AnlVariant::kAcre, aae).target,
            "First of all, [ " + claim + " | Claim ], since [ " + premise +
                " | Premise | Support = " + claim + " ].");
  EXPECT_EQ(Encode(zoo.graph, zoo.text, AnlVariant::kMeAcre, aae).target,
            "(( First of all, )) [ " + claim + " | Claim ](( , since )) [ " + premise +
                " | Premise | Support = " + claim + " ].");
  EXPECT_EQ(Encode(zoo.graph, zoo.text, AnlVariant::kAbbreviated, aae).target,
            "First of all, [ " + claim + " | Claim C1 ], since [ " + premise +
                " | Premise P1 | Support = C1 ].");
  AnlSequence s = Encode(zoo.graph, zoo.text, AnlVariant::kAcre, aae);
  EXPECT_EQ(s.input, zoo.text.text());
  EXPECT_EQ(s.doc_id, "zoo");
}

TEST(EncodeTest, RejectsInvalidGraphs) {
  Document zoo = testing::ZooDocument();
  ArgGraph bad("zoo", {{0, "Reason", {4, 5}}}, {});
  EXPECT_THROW(Encode(bad, zoo.text, AnlVariant::kAcre, LabelSchema::Aae()), SchemaError);
  ArgGraph overlap("zoo", {{0, "Claim", {4, 8}}, {0, "Claim", {8, 9}}}, {});
  EXPECT_THROW(Encode(overlap, zoo.text, AnlVariant::kAcre, LabelSchema::Aae()),
               ValidationError);
}

TEST(EncodeTest, RelationsOrderedByTail) {
  ArgText t = Tokenize("alpha beta gamma delta");
  ArgGraph g("d", {{0, "Claim", {0, 0}}, {0, "Premise", {1, 1}}, {0, "Premise", {3, 3}}},
             {{"Attack", 2, 1}, {"Support", 2, 0}, {"Attack", 2, 0}});
  EXPECT_EQ(Encode(g, t, AnlVariant::kAcre, LabelSchema::Aae()).target,
            "[ alpha | Claim ] [ beta | Premise ] gamma [ delta | Premise | Attack = alpha | "
            "Support = alpha | Attack = beta ]");
}

TEST(IdTokenTest, PerTypeCountersInDocumentOrder) {
  ArgText t = Tokenize("a b c d e");
  ArgGraph g("d",
             {{0, "Premise", {0, 0}}, {0, "Claim", {1, 1}}, {0, "Premise", {2, 2}},
              {0, "MajorClaim", {3, 3}}, {0, "Premise", {4, 4}}},
             {});
  EXPECT_EQ(AssignIdTokens(g, LabelSchema::Aae()),
            (std::vector<std::string>{"P1", "C1", "P2", "M1", "P3"}));
}

TEST(RoundTripTest, AllVariantsOnSyntheticCorpora) {
  for (bool tree : {true, false}) {
    SyntheticOptions options;
    options.tree = tree;
    for (const char *name : {"aae", "aae-fg", "cdcp"}) {
      LabelSchema schema = LabelSchema::ByName(name);
      SyntheticCorpus corpus(schema, options, tree ? 1 : 2);
      for (const Document &d : corpus.Generate(150)) {
        for (AnlVariant v : kVariants) {
          AnlSequence s = Encode(d.graph, d.text, v, schema);
          ParseOutcome o = Decode(s.target, d.text, v, schema);
          ASSERT_TRUE(o.errors.empty()) << s.target << "\n" << o.errors[0].detail;
          ASSERT_EQ(o.graph, ExpectedRoundTrip(d.graph, v)) << s.target;
        }
      }
    }
  }
}

TEST(RoundTripTest, EmptyGraphDecodesToEmptyGraph) {
  ArgText t = Tokenize("Nothing argumentative here.", "e");
  ArgGraph g("e", {}, {});
  for (AnlVariant v : kVariants) {
    AnlSequence s = Encode(g, t, v, LabelSchema::Aae());
    EXPECT_EQ(s.target, t.text());
    ParseOutcome o = Decode(s.target, t, v, LabelSchema::Aae());
    EXPECT_TRUE(o.errors.empty());
    EXPECT_EQ(o.graph, g);
  }
}

TEST(DecodeTest, ErrorKindsOnHandWrittenOutputs) {
  Document zoo = testing::ZooDocument();
  LabelSchema aae = LabelSchema::Aae();
  auto kinds = [&](const std::string &target, AnlVariant v = AnlVariant::kAcre) {
    return ErrorKinds(Decode(target, zoo.text, v, aae));
  };
  const std::set<ErrorKind> it = {ErrorKind::kInvalidToken};
  const std::set<ErrorKind> ic = {ErrorKind::kInvalidComponent};
  const std::set<ErrorKind> inf = {ErrorKind::kInvalidFormat};
  EXPECT_EQ(kinds("First of all, [ zoos | Claim ], which are"), std::set<ErrorKind>{});
  EXPECT_EQ(kinds("[ flying elephants | Claim ]"), it);
  EXPECT_EQ(kinds("[ zoos | Opinion ]"), it);
  EXPECT_EQ(kinds("[ zoos | Claim | Support = which are ]"), ic);
  EXPECT_EQ(kinds("[ zoos | Claim | Support = purple cows ]"), it);
  EXPECT_EQ(kinds("[ zoos | Claim | Support = zoos ]"), ic);
  EXPECT_EQ(kinds("[ zoos | Claim"), inf);
  EXPECT_EQ(kinds("zoos | Claim ] , which"), inf);
  EXPECT_EQ(kinds("[ zoos ]"), inf);
  EXPECT_EQ(kinds("[ zoos | Claim | Support ]"), inf);
  EXPECT_EQ(kinds("[ zoos | Claim | Support = inside ]", AnlVariant::kComponentOnly), inf);
  EXPECT_EQ(kinds("[ zoos | Claim C0 ]", AnlVariant::kAbbreviated), it);
  EXPECT_EQ(kinds("[ zoos | Claim ]", AnlVariant::kAbbreviated), inf);
  EXPECT_EQ(kinds("[ zoos | Claim C1 ] which [ are | Claim C1 ]", AnlVariant::kAbbreviated), inf);
  EXPECT_EQ(kinds("[ zoos | Claim C1 | Support = P7 ]", AnlVariant::kAbbreviated), it);
  EXPECT_EQ(kinds("(( First of all, )) [ zoos | Claim ]", AnlVariant::kMeAcre),
            std::set<ErrorKind>{});
  EXPECT_EQ(kinds("(( First of all, [ zoos | Claim ]", AnlVariant::kMeAcre), inf);
  EXPECT_EQ(kinds("(( never mind )) zoos", AnlVariant::kMeAcre), it);
}

TEST(DecodeTest, MixedErrorsCountInEveryColumn) {
  Document zoo = testing::ZooDocument();
  ParseOutcome o = Decode("[ flying pigs | Claim ] [ zoos | Claim | Support = inside ] [ die",
                          zoo.text, AnlVariant::kAcre, LabelSchema::Aae());
  EXPECT_EQ(ErrorKinds(o), (std::set<ErrorKind>{ErrorKind::kInvalidToken,
                                                 ErrorKind::kInvalidComponent,
                                                 ErrorKind::kInvalidFormat}));
  // The valid group survives.
  ASSERT_EQ(o.graph.components().size(), 1u);
  EXPECT_EQ(o.graph.components()[0].span, (TokenSpan{4, 4}));
}

TEST(DecodeTest, ForwardTailReferencesResolve) {
  ArgText t = Tokenize("alpha beta gamma");
  ParseOutcome o = Decode("[ alpha | Premise | Support = gamma ] beta [ gamma | Claim ]", t,
                          AnlVariant::kAcre, LabelSchema::Aae());
  ASSERT_TRUE(o.errors.empty());
  EXPECT_EQ(o.graph.relations(), (std::vector<ArgRelation>{{"Support", 0, 1}}));
}

TEST(DecodeTest, DuplicateSurfaceTailsResolveToLeftmostOtherComponent) {
  ArgText t = Tokenize("same words and same words and more");
  ParseOutcome o = Decode("[ same words | Claim ] and [ same words | Claim ] and "
                          "[ more | Premise | Support = same words ]",
                          t, AnlVariant::kAcre, LabelSchema::Aae());
  ASSERT_TRUE(o.errors.empty());
  EXPECT_EQ(o.graph.relations(), (std::vector<ArgRelation>{{"Support", 2, 0}}));
  ParseOutcome self = Decode("[ same words | Claim | Support = same words ] and "
                             "[ same words | Claim ] and more",
                             t, AnlVariant::kAcre, LabelSchema::Aae());
  ASSERT_TRUE(self.errors.empty());
  EXPECT_EQ(self.graph.relations(), (std::vector<ArgRelation>{{"Support", 0, 1}}));
}

TEST(DecodeTest, NeverThrowsOnRandomGarbage) {
  std::mt19937_64 rng(5);
  Document zoo = testing::ZooDocument();
  const std::string alphabet = "[]|=() abcdzoos,.PCM123";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    int len = std::uniform_int_distribution<int>(0, 60)(rng);
    for (int k = 0; k < len; ++k) {
      s += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    }
    for (AnlVariant v : kVariants) {
      EXPECT_NO_THROW(Decode(s, zoo.text, v, LabelSchema::Aae())) << s;
    }
    EXPECT_NO_THROW(DecodeMarkerGroups(s, zoo.text));
  }
}

TEST(MutationTest, SingleMutationsAreClassifiedExactly) {
  std::mt19937_64 rng(17);
  LabelSchema aae = LabelSchema::Aae();
  SyntheticCorpus corpus(aae, {}, 23);
  std::vector<Document> docs = corpus.Generate(300);
  int checked = 0;
  for (MutationKind kind : {MutationKind::kFormat, MutationKind::kToken, MutationKind::kComponent}) {
    for (AnlVariant v : kVariants) {
      for (const Document &d : docs) {
        auto m = Mutate(d, v, aae, {kind}, rng);
        if (!m) continue;
        ParseOutcome o = Decode(m->target, d.text, v, aae);
        ASSERT_EQ(ErrorKinds(o), m->kinds) << VariantName(v) << ": " << m->target;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 2000);
}

TEST(MutationTest, CombinedMutationsReportEveryKind) {
  std::mt19937_64 rng(29);
  LabelSchema aae = LabelSchema::Aae();
  SyntheticOptions options;
  options.min_components = 3;
  SyntheticCorpus corpus(aae, options, 31);
  int checked = 0;
  for (const Document &d : corpus.Generate(300)) {
    for (AnlVariant v : {AnlVariant::kAcre, AnlVariant::kMeAcre, AnlVariant::kAbbreviated}) {
      auto m = Mutate(d, v, aae,
                      {MutationKind::kFormat, MutationKind::kToken, MutationKind::kComponent},
                      rng);
      if (!m) continue;
      ParseOutcome o = Decode(m->target, d.text, v, aae);
      ASSERT_EQ(ErrorKinds(o), m->kinds) << m->target;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(StripSymbolsTest, RecoversSourceText) {
  Document zoo = testing::ZooDocument();
  for (AnlVariant v : kVariants) {
    EXPECT_EQ(StripSymbols(Encode(zoo.graph, zoo.text, v, LabelSchema::Aae()).target),
              zoo.text.text());
  }
  SyntheticCorpus corpus(LabelSchema::Aae(), {}, 41);
  for (const Document &d : corpus.Generate(300)) {
    for (AnlVariant v : kVariants) {
      EXPECT_EQ(StripSymbols(Encode(d.graph, d.text, v, LabelSchema::Aae()).target),
                d.text.text());
    }
  }
}

TEST(StripSymbolsTest, TolerantOfBrokenInput) {
  EXPECT_EQ(StripSymbols("a [ b | X | R = c ] d"), "a b d");
  EXPECT_EQ(StripSymbols("a [ b | X"), "a b");
  EXPECT_EQ(StripSymbols("a ] b | c"), "a  b  c");
  EXPECT_EQ(StripSymbols("(( However, )) x"), "However, x");
  EXPECT_EQ(StripSymbols(""), "");
}

TEST(AbbreviationTest, DecodesToSameGraphAsAcre) {
  for (const char *name : {"aae", "aae-fg", "cdcp"}) {
    LabelSchema schema = LabelSchema::ByName(name);
    SyntheticOptions options;
    options.tree = false;
    SyntheticCorpus corpus(schema, options, 43);
    for (const Document &d : corpus.Generate(200)) {
      ParseOutcome a = Decode(Encode(d.graph, d.text, AnlVariant::kAcre, schema).target,
                              d.text, AnlVariant::kAcre, schema);
      ParseOutcome b = Decode(Encode(d.graph, d.text, AnlVariant::kAbbreviated, schema).target,
                              d.text, AnlVariant::kAbbreviated, schema);
      EXPECT_EQ(a.graph, b.graph);
    }
  }
}

// Every component gains an ID word; every relation swaps its tail span for
// one ID word.
TEST(AbbreviationTest, LengthChangeFollowsExactFormula) {
  LabelSchema aae = LabelSchema::Aae();
  SyntheticCorpus corpus(aae, {}, 47);
  for (const Document &d : corpus.Generate(500)) {
    int predicted = static_cast<int>(d.graph.components().size());
    for (const ArgRelation &r : d.graph.relations()) {
      predicted -= Words(SpanText(d.text, d.graph.components()[r.tail].span)) - 1;
    }
    int acre = Words(Encode(d.graph, d.text, AnlVariant::kAcre, aae).target);
    int abbr = Words(Encode(d.graph, d.text, AnlVariant::kAbbreviated, aae).target);
    EXPECT_EQ(abbr - acre, predicted);
  }
}

// With at least three components, full attachment and tails of three or more
// words, the savings outweigh the added IDs.
TEST(AbbreviationTest, ShorterWhenTailsOutweighIds) {
  LabelSchema aae = LabelSchema::Aae();
  SyntheticOptions options;
  options.min_components = 3;
  options.min_span_tokens = 3;
  options.attach_probability = 1.0;
  SyntheticCorpus corpus(aae, options, 53);
  for (const Document &d : corpus.Generate(500)) {
    if (d.graph.relations().empty()) continue;
    EXPECT_LT(Words(Encode(d.graph, d.text, AnlVariant::kAbbreviated, aae).target),
              Words(Encode(d.graph, d.text, AnlVariant::kAcre, aae).target));
  }
}

TEST(SequenceJsonTest, RoundTrip) {
  Document zoo = testing::ZooDocument();
  AnlSequence s = Encode(zoo.graph, zoo.text, AnlVariant::kMeAcre, LabelSchema::Aae());
  AnlSequence back = SequenceFromJson(SequenceToJson(s));
  EXPECT_EQ(back.target, s.target);
  EXPECT_EQ(back.variant, s.variant);
  ParseOutcome o = Decode("[ zoos | Claim ] [ x", zoo.text, AnlVariant::kAcre, LabelSchema::Aae());
  ParseOutcome o2 = OutcomeFromJson(OutcomeToJson(o));
  EXPECT_EQ(o2.graph, o.graph);
  ASSERT_EQ(o2.errors.size(), o.errors.size());
  EXPECT_EQ(o2.errors[0].kind, o.errors[0].kind);
  EXPECT_THROW(ParseVariant("ACRE+"), SchemaError);
}

}  // namespace
}  // namespace anlforge
