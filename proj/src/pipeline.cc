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

#include "anlforge/pipeline.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>

#include "spdlog/spdlog.h"

#include "anlforge/errors.h"

namespace anlforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void Fnv1a(std::uint64_t *hash, const std::string &bytes) {
  for (unsigned char c : bytes) {
    *hash ^= c;
    *hash *= 1099511628211ull;
  }
}

void RequireExists(const fs::path &path, const char *what) {
  if (!fs::exists(path)) {
    throw IoError(std::string(what) + " not found: " + path.string());
  }
}

}  // namespace

void InitLogging() {
  const char *env = std::getenv("ANLFORGE_LOG");
  spdlog::level::level_enum level = spdlog::level::info;
  if (env != nullptr && *env != '\0') level = spdlog::level::from_str(env);
  spdlog::set_level(level);
  spdlog::set_pattern("[%l] %v");
}

void CheckVariantForCorpus(const CorpusDescriptor &corpus, AnlVariant variant) {
  if (variant == AnlVariant::kMeAcre && !corpus.markers_outside_components) {
    throw SchemaError("variant 'me' is not available for corpus '" + corpus.name +
                      "': its markers fall inside component spans");
  }
}

IngestResult IngestCorpus(const CorpusDescriptor &corpus, const fs::path &input,
                          const std::optional<fs::path> &fine_labels) {
  switch (corpus.kind) {
    case CorpusKind::kAae:
      return ReadStandoffCorpus(input, *corpus.schema);
    case CorpusKind::kAaeFg: {
      std::optional<fs::path> labels = fine_labels;
      if (!labels) labels = input / "fine_labels.tsv";
      return ReadStandoffCorpus(input, *corpus.schema, labels);
    }
    case CorpusKind::kCdcp:
      return ReadCdcpCorpus(input);
    case CorpusKind::kDmPairs:
      break;
  }
  throw SchemaError("corpus '" + corpus.name + "' does not produce documents");
}

std::vector<AnlSequence> EncodeCorpus(const std::vector<Document> &docs,
                                      AnlVariant variant,
                                      const LabelSchema &schema, int jobs) {
  return ParallelMap(docs.size(), jobs, [&](std::size_t i) {
    return Encode(docs[i].graph, docs[i].text, variant, schema);
  });
}

std::vector<Generation> ReadGenerations(const fs::path &path) {
  std::vector<Generation> out;
  for (const json &record : ReadJsonLines(path)) {
    try {
      out.push_back({record.at("doc_id").get<std::string>(),
                     record.at("output").get<std::string>()});
    } catch (const json::exception &e) {
      throw ValidationError(path.string() + ": malformed generation record: " +
                            e.what());
    }
  }
  return out;
}

json GenerationToJson(const Generation &generation) {
  return {{"doc_id", generation.doc_id}, {"output", generation.output}};
}

std::vector<ParseOutcome> DecodeGenerations(
    const std::vector<Generation> &generations,
    const std::vector<Document> &corpus, AnlVariant variant,
    const LabelSchema &schema, int jobs) {
  std::map<std::string, const Document *> index;
  for (const Document &d : corpus) index[d.text.doc_id()] = &d;
  std::map<std::string, int> seen;
  for (const Generation &g : generations) {
    if (index.count(g.doc_id) == 0) {
      throw AlignmentError("generation for unknown document " + g.doc_id);
    }
    if (++seen[g.doc_id] > 1) {
      throw AlignmentError("more than one generation for " + g.doc_id);
    }
  }
  return ParallelMap(generations.size(), jobs, [&](std::size_t i) {
    const Generation &g = generations[i];
    return Decode(g.output, index.at(g.doc_id)->text, variant, schema);
  });
}

std::vector<MarkerCandidate> ExtractCorpusCandidates(
    const std::vector<Document> &docs, int jobs) {
  std::vector<std::vector<MarkerCandidate>> per_doc =
      ParallelMap(docs.size(), jobs, [&](std::size_t i) {
        return ExtractCandidates(docs[i].graph, docs[i].text);
      });
  std::vector<MarkerCandidate> out;
  for (auto &v : per_doc) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Document> AnnotateCorpus(const std::vector<Document> &docs,
                                     const MarkerLexicon &lexicon, int jobs) {
  return ParallelMap(docs.size(), jobs, [&](std::size_t i) {
    return Document{docs[i].text,
                    AnnotateMarkers(docs[i].graph, docs[i].text, lexicon)};
  });
}

std::string ContentDigest(const fs::path &path) {
  std::uint64_t hash = 14695981039346656037ull;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::recursive_directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path &f : files) {
      Fnv1a(&hash, fs::relative(f, path).generic_string());
      Fnv1a(&hash, ReadFile(f));
    }
  } else {
    Fnv1a(&hash, ReadFile(path));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

fs::path StagedOutputs::Stage(const fs::path &path) {
  finals_.push_back(path);
  fs::path partial = path;
  partial += ".partial";
  return partial;
}

void StagedOutputs::Commit() {
  for (const fs::path &final_path : finals_) {
    fs::path partial = final_path;
    partial += ".partial";
    fs::rename(partial, final_path);
  }
}

RunManifest::RunManifest(std::string command) {
  body_ = {{"tool", "anlforge"},
           {"version", kVersion},
           {"command", std::move(command)},
           {"started_at", Timestamp()},
           {"inputs", json::object()},
           {"outputs", json::object()},
           {"counts", json::object()}};
}

void RunManifest::AddInput(const fs::path &path) {
  body_["inputs"][path.generic_string()] = ContentDigest(path);
}

void RunManifest::AddOutput(const fs::path &path) {
  body_["outputs"][path.generic_string()] =
      fs::exists(path) ? ContentDigest(path) : "missing";
}

void RunManifest::Write(const fs::path &path, bool ok, const std::string &error) {
  body_["status"] = ok ? "ok" : "failed";
  if (!error.empty()) body_["error"] = error;
  body_["finished_at"] = Timestamp();
  WriteFile(path, body_.dump(2) + "\n");
}

PipelineConfig PipelineConfig::FromJson(const json &record, const fs::path &base) {
  auto resolve = [&](const std::string &p) {
    fs::path path(p);
    return path.is_relative() && !base.empty() ? base / path : path;
  };
  PipelineConfig config;
  try {
    config.corpus = record.value("corpus", config.corpus);
    if (record.contains("in")) config.input = resolve(record.at("in").get<std::string>());
    if (record.contains("out_dir")) {
      config.out_dir = resolve(record.at("out_dir").get<std::string>());
    }
    if (record.contains("variant")) {
      config.variant = ParseVariant(record.at("variant").get<std::string>());
    }
    for (auto [key, field] :
         {std::pair{"lexicon", &config.lexicon}, std::pair{"filter", &config.filter},
          std::pair{"generations", &config.generations},
          std::pair{"fine_labels", &config.fine_labels}}) {
      if (record.contains(key) && !record.at(key).is_null()) {
        *field = resolve(record.at(key).get<std::string>());
      }
    }
    config.seed = record.value("seed", config.seed);
    config.jobs = record.value("jobs", config.jobs);
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed pipeline config: ") + e.what());
  }
  return config;
}

json PipelineConfig::ToJson() const {
  json out = {{"corpus", corpus},
              {"in", input.generic_string()},
              {"out_dir", out_dir.generic_string()},
              {"variant", VariantName(variant)},
              {"seed", seed},
              {"jobs", jobs}};
  auto opt = [](const std::optional<fs::path> &p) -> json {
    return p ? json(p->generic_string()) : json(nullptr);
  };
  out["lexicon"] = opt(lexicon);
  out["filter"] = opt(filter);
  out["generations"] = opt(generations);
  out["fine_labels"] = opt(fine_labels);
  return out;
}

void PipelineConfig::Validate() const {
  CorpusDescriptor descriptor = CorpusDescriptor::ByName(corpus);
  if (descriptor.kind == CorpusKind::kDmPairs) {
    throw SchemaError("the pipeline needs an annotated corpus (aae, aae-fg or cdcp)");
  }
  CheckVariantForCorpus(descriptor, variant);
  if (input.empty()) throw ValidationError("no input directory configured");
  if (out_dir.empty()) throw ValidationError("no output directory configured");
  if (jobs < 1) throw ValidationError("jobs must be at least 1");
  RequireExists(input, "input directory");
  if (lexicon) RequireExists(*lexicon, "lexicon");
  if (filter) RequireExists(*filter, "filter list");
  if (generations) RequireExists(*generations, "generations file");
  if (fine_labels) RequireExists(*fine_labels, "fine-grained label file");
}

RunSummary RunPipeline(const PipelineConfig &config) {
  config.Validate();
  const CorpusDescriptor descriptor = CorpusDescriptor::ByName(config.corpus);
  const LabelSchema &schema = *descriptor.schema;
  const fs::path &out = config.out_dir;
  fs::create_directories(out);

  RunManifest manifest("run");
  manifest.SetConfig(config.ToJson());
  manifest.AddInput(config.input);
  StagedOutputs staged;
  const fs::path manifest_path = out / "manifest.json";
  try {
    IngestResult ingested = IngestCorpus(descriptor, config.input, config.fine_labels);
    std::vector<Document> docs = std::move(ingested.docs);
    manifest.SetCount("documents", docs.size());
    manifest.SetCount("ingest_warnings", ingested.warnings.size());
    manifest.SetCount("non_tree_documents", ingested.non_tree_documents);
    spdlog::info("ingested {} documents from {}", docs.size(), config.input.string());

    std::vector<MarkerCandidate> candidates = ExtractCorpusCandidates(docs, config.jobs);
    WriteCandidatesTsv(staged.Stage(out / "candidates.tsv"), candidates);
    MarkerLexicon lexicon;
    if (config.lexicon) {
      manifest.AddInput(*config.lexicon);
      lexicon = MarkerLexicon::FromJson(json::parse(ReadFile(*config.lexicon)));
    } else {
      std::vector<std::string> filter;
      if (config.filter) {
        manifest.AddInput(*config.filter);
        filter = ReadFilterList(*config.filter);
      }
      std::vector<std::string> surfaces;
      for (const MarkerCandidate &c : candidates) surfaces.push_back(c.surface);
      LexiconStats stats;
      lexicon = BuildLexicon(surfaces, filter, &stats);
      manifest.SetCount("marker_candidates", stats.raw_candidates);
      manifest.SetCount("markers_filtered", stats.filtered);
    }
    manifest.SetCount("lexicon_entries", lexicon.argumentative().size());
    WriteFile(staged.Stage(out / "lexicon.json"), lexicon.ToJson().dump(2) + "\n");

    if (config.variant == AnlVariant::kMeAcre) {
      docs = AnnotateCorpus(docs, lexicon, config.jobs);
    }
    WriteCorpus(staged.Stage(out / "corpus.jsonl"), docs);

    std::vector<AnlSequence> pairs = EncodeCorpus(docs, config.variant, schema, config.jobs);
    std::vector<json> pair_records;
    for (const AnlSequence &s : pairs) pair_records.push_back(SequenceToJson(s));
    WriteJsonLines(staged.Stage(out / "pairs.jsonl"), pair_records);

    std::vector<Generation> generations;
    if (config.generations) {
      manifest.AddInput(*config.generations);
      generations = ReadGenerations(*config.generations);
    } else {
      for (const AnlSequence &s : pairs) generations.push_back({s.doc_id, s.target});
      std::vector<json> records;
      for (const Generation &g : generations) records.push_back(GenerationToJson(g));
      WriteJsonLines(staged.Stage(out / "gen.jsonl"), records);
    }
    std::vector<ParseOutcome> outcomes =
        DecodeGenerations(generations, docs, config.variant, schema, config.jobs);
    std::vector<json> parsed;
    for (const ParseOutcome &o : outcomes) parsed.push_back(OutcomeToJson(o));
    WriteJsonLines(staged.Stage(out / "parsed.jsonl"), parsed);

    std::vector<ArgGraph> gold;
    for (const Document &d : docs) gold.push_back(d.graph);
    EvalReport report = Score(gold, outcomes);
    report.length_stats = ComputeLengthStats(
        EncodeCorpus(docs, AnlVariant::kAcre, schema, config.jobs),
        EncodeCorpus(docs, AnlVariant::kAbbreviated, schema, config.jobs));
    WriteFile(staged.Stage(out / "report.json"), ReportToJson(report).dump(2) + "\n");

    staged.Commit();
    for (const fs::path &p : staged.finals()) manifest.AddOutput(p);
    manifest.SetCount("ace_f1", report.ace.f1());
    manifest.SetCount("arc_f1", report.arc.f1());
    manifest.Write(manifest_path, true);
    return {report, manifest.body()};
  } catch (const std::exception &e) {
    manifest.Write(manifest_path, false, e.what());
    throw;
  }
}

}  // namespace anlforge
