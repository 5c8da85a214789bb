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

// anlforge: corpus ingestion, marker lexicons, ANL encoding/decoding, MFT
// data and scoring. Every command writes OUT.manifest.json next to its
// output; failed commands exit nonzero and leave OUT.partial behind.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spdlog/spdlog.h"

#include "anlforge/anl_codec.h"
#include "anlforge/errors.h"
#include "anlforge/eval.h"
#include "anlforge/ingest.h"
#include "anlforge/markers.h"
#include "anlforge/mft.h"
#include "anlforge/pipeline.h"
#include "anlforge/record.h"
#include "anlforge/synthetic.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace anlforge;

namespace {

using Body = std::function<void(RunManifest &, StagedOutputs &)>;

fs::path ManifestPath(const fs::path &out) {
  fs::path p = out;
  p += ".manifest.json";
  return p;
}

// Runs one command with staged outputs and a manifest at OUT.manifest.json.
int Execute(const std::string &command, const fs::path &out, json config,
            const Body &body) {
  RunManifest manifest(command);
  manifest.SetConfig(std::move(config));
  StagedOutputs staged;
  try {
    body(manifest, staged);
    staged.Commit();
    for (const fs::path &p : staged.finals()) manifest.AddOutput(p);
    manifest.Write(ManifestPath(out), true);
    return 0;
  } catch (const std::exception &e) {
    spdlog::error("{}: {}", command, e.what());
    try {
      manifest.Write(ManifestPath(out), false, e.what());
    } catch (const std::exception &inner) {
      spdlog::error("could not write manifest: {}", inner.what());
    }
    return 1;
  }
}

std::vector<json> ToRecords(const std::vector<AnlSequence> &seqs) {
  std::vector<json> out;
  for (const AnlSequence &s : seqs) out.push_back(SequenceToJson(s));
  return out;
}

std::vector<ParseOutcome> ReadOutcomes(const fs::path &path) {
  std::vector<ParseOutcome> out;
  for (const json &r : ReadJsonLines(path)) out.push_back(OutcomeFromJson(r));
  return out;
}

std::vector<AnlSequence> ReadSequences(const fs::path &path) {
  std::vector<AnlSequence> out;
  for (const json &r : ReadJsonLines(path)) out.push_back(SequenceFromJson(r));
  return out;
}

std::vector<ArgGraph> Graphs(const std::vector<Document> &docs) {
  std::vector<ArgGraph> out;
  for (const Document &d : docs) out.push_back(d.graph);
  return out;
}

void WriteJson(StagedOutputs &staged, const fs::path &out, const json &value) {
  WriteFile(staged.Stage(out), value.dump(2) + "\n");
}

json CorpusStats(const std::vector<Document> &docs) {
  long tokens = 0, sentences = 0, markers = 0, non_forest = 0;
  std::map<std::string, long> ctypes, rtypes;
  for (const Document &d : docs) {
    tokens += d.text.size();
    sentences += static_cast<long>(d.text.sentences().size());
    markers += static_cast<long>(d.graph.markers().size());
    non_forest += !d.graph.IsForest();
    for (const ArgComponent &c : d.graph.components()) ++ctypes[c.type];
    for (const ArgRelation &r : d.graph.relations()) ++rtypes[r.type];
  }
  return {{"documents", docs.size()}, {"tokens", tokens},
          {"sentences", sentences},   {"markers", markers},
          {"component_types", ctypes}, {"relation_types", rtypes},
          {"non_forest_documents", non_forest}};
}

json BucketsToJson(const std::map<int, EvalReport> &buckets) {
  json out = json::object();
  for (const auto &[bucket, report] : buckets) {
    out[std::to_string(bucket)] = ReportToJson(report);
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  InitLogging();
  CLI::App app{"anlforge: argument mining data toolchain"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // Shared option storage.
  std::string corpus = "aae", variant = "acre", strategy, key = "adu_count";
  fs::path in, out, fine_labels, lexicon_path, filter_path, gold_path, pred_path,
      corpus_path, standard_path, abbr_path, config_path, generations_path;
  int jobs = 1, budget = kDefaultSentinelBudget, count = 50, per_essay = 4;
  std::uint64_t seed = 0;
  bool skip_over_budget = false;
  std::string bucket;

  // ingest
  CLI::App *ingest = app.add_subcommand("ingest", "Read a raw corpus into JSONL records");
  ingest->add_option("--corpus", corpus, "aae | aae-fg | cdcp | dm")->required();
  ingest->add_option("--in", in, "Corpus directory (or TSV file for dm)")->required();
  ingest->add_option("--out", out, "Output JSONL")->required();
  ingest->add_option("--fine-labels", fine_labels, "Fine-grained label TSV (aae-fg)");

  // markers
  CLI::App *markers = app.add_subcommand("markers", "Marker candidates and lexicons");
  markers->require_subcommand(1);
  CLI::App *m_extract = markers->add_subcommand("extract", "Extract leading/sandwich candidates");
  m_extract->add_option("--in", in, "Corpus JSONL")->required();
  m_extract->add_option("--out", out, "Candidate TSV")->required();
  m_extract->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  CLI::App *m_build = markers->add_subcommand("build", "Build a lexicon from candidates");
  m_build->add_option("--in", in, "Candidate TSV")->required();
  m_build->add_option("--filter", filter_path, "Filter list");
  m_build->add_option("--out", out, "Lexicon JSON")->required();
  CLI::App *m_annotate = markers->add_subcommand("annotate", "Mark lexicon hits in a corpus");
  m_annotate->add_option("--in", in, "Corpus JSONL")->required();
  m_annotate->add_option("--lexicon", lexicon_path, "Lexicon JSON")->required();
  m_annotate->add_option("--out", out, "Annotated corpus JSONL")->required();
  m_annotate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // encode / decode
  CLI::App *encode = app.add_subcommand("encode", "Linearize gold graphs into ANL pairs");
  encode->add_option("--in", in, "Corpus JSONL")->required();
  encode->add_option("--out", out, "pairs.jsonl")->required();
  encode->add_option("--variant", variant, "comp | acre | me | abbr");
  encode->add_option("--corpus", corpus, "Label schema / corpus: aae | aae-fg | cdcp");
  encode->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  CLI::App *decode = app.add_subcommand("decode", "Parse generated ANL back into graphs");
  decode->add_option("--in", in, "gen.jsonl with {doc_id, output}")->required();
  decode->add_option("--source", corpus_path, "Corpus JSONL the generations refer to")
      ->required();
  decode->add_option("--out", out, "parsed.jsonl")->required();
  decode->add_option("--variant", variant, "comp | acre | me | abbr");
  decode->add_option("--corpus", corpus, "aae | aae-fg | cdcp");
  decode->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // mft
  CLI::App *mft = app.add_subcommand("mft", "Marker-based fine-tuning data");
  mft->require_subcommand(1);
  CLI::App *mft_build = mft->add_subcommand("build", "Build one MFT dataset");
  mft_build->add_option("--strategy", strategy, "amkt | smmkt | emkt | dmkt")->required();
  mft_build->add_option("--in", in, "Marker-annotated corpus JSONL, or DM pairs JSONL")
      ->required();
  mft_build->add_option("--out", out, "mft.jsonl")->required();
  mft_build->add_option("--budget", budget, "Sentinel family size (smmkt)");
  mft_build->add_flag("--skip-over-budget", skip_over_budget,
                      "Skip paragraphs that exceed the sentinel budget");

  // eval
  CLI::App *eval = app.add_subcommand("eval", "Score decoded output");
  eval->require_subcommand(1);
  CLI::App *e_score = eval->add_subcommand("score", "Micro-F1 and error rates");
  e_score->add_option("--gold", gold_path, "Gold corpus JSONL")->required();
  e_score->add_option("--pred", pred_path, "parsed.jsonl")->required();
  e_score->add_option("--out", out, "report.json")->required();
  e_score->add_option("--bucket", bucket, "Add per-bucket scores: adu_count | sentence_count");
  e_score->add_option("--standard", standard_path, "Standard pairs.jsonl for length stats");
  e_score->add_option("--abbr", abbr_path, "Abbreviated pairs.jsonl for length stats");
  CLI::App *e_buckets = eval->add_subcommand("buckets", "Scores grouped by input size");
  e_buckets->add_option("--gold", gold_path, "Gold corpus JSONL")->required();
  e_buckets->add_option("--pred", pred_path, "parsed.jsonl")->required();
  e_buckets->add_option("--key", key, "adu_count | sentence_count");
  e_buckets->add_option("--out", out, "buckets.json")->required();

  // stats
  CLI::App *stats = app.add_subcommand("stats", "Corpus and output statistics");
  stats->require_subcommand(1);
  CLI::App *s_corpus = stats->add_subcommand("corpus", "Counts over a corpus JSONL");
  s_corpus->add_option("--in", in, "Corpus JSONL")->required();
  s_corpus->add_option("--out", out, "stats.json")->required();
  CLI::App *s_length = stats->add_subcommand("length", "Abbreviation length reduction");
  s_length->add_option("--standard", standard_path, "ACRE pairs.jsonl")->required();
  s_length->add_option("--abbr", abbr_path, "Abbreviated pairs.jsonl")->required();
  s_length->add_option("--out", out, "length.json")->required();
  CLI::App *s_errors = stats->add_subcommand("errors", "Error rates of decoded output");
  s_errors->add_option("--in", in, "parsed.jsonl")->required();
  s_errors->add_option("--out", out, "errors.json")->required();
  CLI::App *s_dm = stats->add_subcommand("dm", "Connective histogram of DM pairs");
  s_dm->add_option("--in", in, "DM pairs JSONL")->required();
  s_dm->add_option("--out", out, "histogram.json")->required();

  // run
  PipelineConfig run_config;
  std::string run_variant;
  CLI::App *run = app.add_subcommand("run", "ingest -> markers -> encode -> decode -> eval");
  run->add_option("--config", config_path, "Pipeline config JSON");
  CLI::Option *o_corpus = run->add_option("--corpus", corpus, "aae | aae-fg | cdcp");
  CLI::Option *o_in = run->add_option("--in", in, "Corpus directory");
  CLI::Option *o_out = run->add_option("--out-dir", out, "Artifact directory");
  CLI::Option *o_variant = run->add_option("--variant", run_variant, "comp | acre | me | abbr");
  CLI::Option *o_lex = run->add_option("--lexicon", lexicon_path, "Existing lexicon JSON");
  CLI::Option *o_filter = run->add_option("--filter", filter_path, "Marker filter list");
  CLI::Option *o_gen = run->add_option("--generations", generations_path,
                                       "Model output gen.jsonl (default: gold targets)");
  CLI::Option *o_fine = run->add_option("--fine-labels", fine_labels, "aae-fg label TSV");
  CLI::Option *o_seed = run->add_option("--seed", seed);
  CLI::Option *o_jobs = run->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // synth
  CLI::App *synth = app.add_subcommand("synth", "Write a synthetic AAE-style standoff corpus");
  synth->add_option("--out", out, "Output directory")->required();
  synth->add_option("--count", count, "Paragraphs")->check(CLI::NonNegativeNumber);
  synth->add_option("--per-essay", per_essay, "Paragraphs per essay")
      ->check(CLI::PositiveNumber);
  synth->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  if (ingest->parsed()) {
    json config = {{"corpus", corpus}, {"in", in.generic_string()},
                   {"out", out.generic_string()}};
    if (!fine_labels.empty()) config["fine_labels"] = fine_labels.generic_string();
    return Execute("ingest", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      CorpusDescriptor descriptor = CorpusDescriptor::ByName(corpus);
      m.AddInput(in);
      if (descriptor.kind == CorpusKind::kDmPairs) {
        DmReadResult read = ReadDmPairs(in);
        std::vector<json> records;
        for (const DmPair &p : read.pairs) records.push_back(DmPairToJson(p));
        WriteJsonLines(staged.Stage(out), records);
        m.SetCount("pairs", read.pairs.size());
        m.SetCount("skipped_lines", read.skipped);
        return;
      }
      std::optional<fs::path> labels;
      if (!fine_labels.empty()) {
        labels = fine_labels;
        m.AddInput(fine_labels);
      }
      IngestResult result = IngestCorpus(descriptor, in, labels);
      WriteCorpus(staged.Stage(out), result.docs);
      m.SetCount("documents", result.docs.size());
      m.SetCount("warnings", result.warnings.size());
      m.SetCount("non_tree_documents", result.non_tree_documents);
    });
  }

  if (m_extract->parsed()) {
    json config = {{"in", in.generic_string()}, {"out", out.generic_string()}};
    return Execute("markers extract", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(in);
      std::vector<MarkerCandidate> candidates =
          ExtractCorpusCandidates(ReadCorpus(in), jobs);
      WriteCandidatesTsv(staged.Stage(out), candidates);
      m.SetCount("candidates", candidates.size());
    });
  }

  if (m_build->parsed()) {
    json config = {{"in", in.generic_string()}, {"out", out.generic_string()}};
    if (!filter_path.empty()) config["filter"] = filter_path.generic_string();
    return Execute("markers build", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(in);
      std::vector<std::string> filter;
      if (!filter_path.empty()) {
        m.AddInput(filter_path);
        filter = ReadFilterList(filter_path);
      }
      std::vector<std::string> surfaces;
      for (const MarkerCandidate &c : ReadCandidatesTsv(in)) surfaces.push_back(c.surface);
      LexiconStats lex_stats;
      MarkerLexicon lexicon = BuildLexicon(surfaces, filter, &lex_stats);
      WriteJson(staged, out, lexicon.ToJson());
      m.SetCount("raw_candidates", lex_stats.raw_candidates);
      m.SetCount("filtered", lex_stats.filtered);
      m.SetCount("unique", lex_stats.unique);
    });
  }

  if (m_annotate->parsed()) {
    json config = {{"in", in.generic_string()},
                   {"lexicon", lexicon_path.generic_string()},
                   {"out", out.generic_string()}};
    return Execute("markers annotate", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(in);
      m.AddInput(lexicon_path);
      MarkerLexicon lexicon = MarkerLexicon::FromJson(json::parse(ReadFile(lexicon_path)));
      std::vector<Document> docs = AnnotateCorpus(ReadCorpus(in), lexicon, jobs);
      long total = 0;
      for (const Document &d : docs) total += static_cast<long>(d.graph.markers().size());
      WriteCorpus(staged.Stage(out), docs);
      m.SetCount("documents", docs.size());
      m.SetCount("markers", total);
    });
  }

  if (encode->parsed()) {
    json config = {{"in", in.generic_string()}, {"out", out.generic_string()},
                   {"variant", variant}, {"corpus", corpus}};
    return Execute("encode", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      CorpusDescriptor descriptor = CorpusDescriptor::ByName(corpus);
      if (!descriptor.schema) throw SchemaError("corpus '" + corpus + "' has no label schema");
      AnlVariant v = ParseVariant(variant);
      CheckVariantForCorpus(descriptor, v);
      m.AddInput(in);
      std::vector<AnlSequence> pairs = EncodeCorpus(ReadCorpus(in), v, *descriptor.schema, jobs);
      WriteJsonLines(staged.Stage(out), ToRecords(pairs));
      m.SetCount("pairs", pairs.size());
    });
  }

  if (decode->parsed()) {
    json config = {{"in", in.generic_string()},
                   {"source", corpus_path.generic_string()},
                   {"out", out.generic_string()},
                   {"variant", variant},
                   {"corpus", corpus}};
    return Execute("decode", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      CorpusDescriptor descriptor = CorpusDescriptor::ByName(corpus);
      if (!descriptor.schema) throw SchemaError("corpus '" + corpus + "' has no label schema");
      AnlVariant v = ParseVariant(variant);
      CheckVariantForCorpus(descriptor, v);
      m.AddInput(in);
      m.AddInput(corpus_path);
      std::vector<ParseOutcome> outcomes = DecodeGenerations(
          ReadGenerations(in), ReadCorpus(corpus_path), v, *descriptor.schema, jobs);
      std::vector<json> records;
      for (const ParseOutcome &o : outcomes) records.push_back(OutcomeToJson(o));
      WriteJsonLines(staged.Stage(out), records);
      ErrorRates rates = ComputeErrorRates(outcomes);
      m.SetCount("sequences", outcomes.size());
      m.SetCount("IT", rates.invalid_token);
      m.SetCount("IC", rates.invalid_component);
      m.SetCount("IF", rates.invalid_format);
    });
  }

  if (mft_build->parsed()) {
    json config = {{"strategy", strategy}, {"in", in.generic_string()},
                   {"out", out.generic_string()}, {"budget", budget}};
    return Execute("mft build", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      MftStrategy s = ParseStrategy(strategy);
      m.AddInput(in);
      std::vector<json> records;
      int skipped = 0;
      if (s == MftStrategy::kDmkt) {
        for (const json &r : ReadJsonLines(in)) {
          records.push_back(MftPairToJson(BuildDmkt(DmPairFromJson(r))));
        }
      } else {
        for (const Document &d : ReadCorpus(in)) {
          const std::vector<TokenSpan> &spans = d.graph.markers();
          MftPair pair;
          if (s == MftStrategy::kAmkt) {
            pair = BuildAmkt(d.text, spans);
          } else if (s == MftStrategy::kEmkt) {
            pair = BuildEmkt(d.text, spans);
          } else {
            try {
              pair = BuildSmmkt(d.text, spans, budget);
            } catch (const CapacityError &e) {
              if (!skip_over_budget) throw;
              spdlog::warn("{}: {}", d.text.doc_id(), e.what());
              ++skipped;
              continue;
            }
          }
          json record = MftPairToJson(pair);
          record["doc_id"] = d.text.doc_id();
          records.push_back(std::move(record));
        }
      }
      WriteJsonLines(staged.Stage(out), records);
      m.SetCount("pairs", records.size());
      m.SetCount("skipped_over_budget", skipped);
    });
  }

  if (e_score->parsed()) {
    json config = {{"gold", gold_path.generic_string()},
                   {"pred", pred_path.generic_string()},
                   {"out", out.generic_string()}};
    if (!bucket.empty()) config["bucket"] = bucket;
    return Execute("eval score", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(gold_path);
      m.AddInput(pred_path);
      std::vector<Document> gold = ReadCorpus(gold_path);
      std::vector<ParseOutcome> pred = ReadOutcomes(pred_path);
      EvalReport report = Score(Graphs(gold), pred);
      if (standard_path.empty() != abbr_path.empty()) {
        throw ValidationError("--standard and --abbr must be given together");
      }
      if (!standard_path.empty()) {
        m.AddInput(standard_path);
        m.AddInput(abbr_path);
        report.length_stats =
            ComputeLengthStats(ReadSequences(standard_path), ReadSequences(abbr_path));
      }
      json record = ReportToJson(report);
      if (!bucket.empty()) {
        record["buckets"] = {
            {"key", bucket},
            {"groups", BucketsToJson(BucketScores(gold, pred, ParseBucketKey(bucket)))}};
      }
      WriteJson(staged, out, record);
      m.SetCount("documents", gold.size());
      m.SetCount("ace_f1", report.ace.f1());
      m.SetCount("arc_f1", report.arc.f1());
    });
  }

  if (e_buckets->parsed()) {
    json config = {{"gold", gold_path.generic_string()},
                   {"pred", pred_path.generic_string()},
                   {"key", key},
                   {"out", out.generic_string()}};
    return Execute("eval buckets", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(gold_path);
      m.AddInput(pred_path);
      auto buckets = BucketScores(ReadCorpus(gold_path), ReadOutcomes(pred_path),
                                  ParseBucketKey(key));
      WriteJson(staged, out, {{"key", key}, {"groups", BucketsToJson(buckets)}});
      m.SetCount("buckets", buckets.size());
    });
  }

  if (s_corpus->parsed()) {
    json config = {{"in", in.generic_string()}, {"out", out.generic_string()}};
    return Execute("stats corpus", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(in);
      WriteJson(staged, out, CorpusStats(ReadCorpus(in)));
    });
  }

  if (s_length->parsed()) {
    json config = {{"standard", standard_path.generic_string()},
                   {"abbr", abbr_path.generic_string()},
                   {"out", out.generic_string()}};
    return Execute("stats length", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(standard_path);
      m.AddInput(abbr_path);
      LengthStats ls = ComputeLengthStats(ReadSequences(standard_path), ReadSequences(abbr_path));
      WriteJson(staged, out, LengthStatsToJson(ls));
      m.SetCount("documents", ls.documents);
    });
  }

  if (s_errors->parsed()) {
    json config = {{"in", in.generic_string()}, {"out", out.generic_string()}};
    return Execute("stats errors", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(in);
      ErrorRates rates = ComputeErrorRates(ReadOutcomes(in));
      WriteJson(staged, out,
                {{"IT", rates.invalid_token},
                 {"IC", rates.invalid_component},
                 {"IF", rates.invalid_format},
                 {"sequences", rates.sequences}});
      m.SetCount("sequences", rates.sequences);
    });
  }

  if (s_dm->parsed()) {
    json config = {{"in", in.generic_string()}, {"out", out.generic_string()}};
    return Execute("stats dm", out, config, [&](RunManifest &m, StagedOutputs &staged) {
      m.AddInput(in);
      std::vector<DmPair> pairs;
      for (const json &r : ReadJsonLines(in)) pairs.push_back(DmPairFromJson(r));
      WriteJson(staged, out, DmHistogram(pairs));
      m.SetCount("pairs", pairs.size());
    });
  }

  if (run->parsed()) {
    try {
      if (!config_path.empty()) {
        run_config = PipelineConfig::FromJson(json::parse(ReadFile(config_path)),
                                              config_path.parent_path());
      }
      // Flags win over the config file.
      if (*o_corpus) run_config.corpus = corpus;
      if (*o_in) run_config.input = in;
      if (*o_out) run_config.out_dir = out;
      if (*o_variant) run_config.variant = ParseVariant(run_variant);
      if (*o_lex) run_config.lexicon = lexicon_path;
      if (*o_filter) run_config.filter = filter_path;
      if (*o_gen) run_config.generations = generations_path;
      if (*o_fine) run_config.fine_labels = fine_labels;
      if (*o_seed) run_config.seed = seed;
      if (*o_jobs) run_config.jobs = jobs;
      RunSummary summary = RunPipeline(run_config);
      std::cout << ReportToJson(summary.report).dump(2) << "\n";
      return 0;
    } catch (const std::exception &e) {
      spdlog::error("run: {}", e.what());
      return 1;
    }
  }

  if (synth->parsed()) {
    json config = {{"out", out.generic_string()}, {"count", count},
                   {"per_essay", per_essay},      {"seed", seed}};
    // The output is a directory; its manifest sits beside it.
    return Execute("synth", out, config, [&](RunManifest &m, StagedOutputs &) {
      SyntheticCorpus generator(LabelSchema::Aae(), SyntheticOptions{}, seed);
      WriteStandoffCorpus(out, generator.Generate(count), per_essay);
      m.SetCount("paragraphs", count);
      m.AddOutput(out);
    });
  }

  return 0;
}
