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

#ifndef ANLFORGE_PIPELINE_H_
#define ANLFORGE_PIPELINE_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "anlforge/anl_codec.h"
#include "anlforge/eval.h"
#include "anlforge/ingest.h"
#include "anlforge/markers.h"
#include "anlforge/record.h"

namespace anlforge {

inline constexpr char kVersion[] = "0.1.0";

// Sets the spdlog level from ANLFORGE_LOG (trace, debug, info, warn, error,
// off). Defaults to info.
void InitLogging();

// Applies fn(i) for i in [0, n) on up to `jobs` threads. Results keep index
// order, so output does not depend on the thread count. The first exception
// thrown by any call is rethrown.
template <typename Fn>
auto ParallelMap(std::size_t n, int jobs, Fn fn)
    -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  using Result = std::invoke_result_t<Fn, std::size_t>;
  std::vector<std::optional<Result>> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Result> out;
  out.reserve(n);
  for (auto &slot : slots) out.push_back(std::move(*slot));
  return out;
}

// Refuses the marker-enclosing format for corpora whose markers sit inside
// component spans. Throws SchemaError.
void CheckVariantForCorpus(const CorpusDescriptor &corpus, AnlVariant variant);

IngestResult IngestCorpus(const CorpusDescriptor &corpus,
                          const std::filesystem::path &input,
                          const std::optional<std::filesystem::path> &fine_labels);

std::vector<AnlSequence> EncodeCorpus(const std::vector<Document> &docs,
                                      AnlVariant variant,
                                      const LabelSchema &schema, int jobs);

struct Generation {
  std::string doc_id;
  std::string output;
};

// {doc_id, output} records.
std::vector<Generation> ReadGenerations(const std::filesystem::path &path);
nlohmann::json GenerationToJson(const Generation &generation);

// Decodes each generation against the corpus document with the same doc_id.
// Throws AlignmentError for unknown or repeated doc_ids.
std::vector<ParseOutcome> DecodeGenerations(
    const std::vector<Generation> &generations,
    const std::vector<Document> &corpus, AnlVariant variant,
    const LabelSchema &schema, int jobs);

std::vector<MarkerCandidate> ExtractCorpusCandidates(
    const std::vector<Document> &docs, int jobs);

std::vector<Document> AnnotateCorpus(const std::vector<Document> &docs,
                                     const MarkerLexicon &lexicon, int jobs);

// 64-bit FNV-1a of a file, or of the sorted file names and contents of a
// directory, as 16 hex digits.
std::string ContentDigest(const std::filesystem::path &path);

// Files are written to "<path>.partial" and renamed into place by Commit().
// Uncommitted outputs stay behind with the .partial suffix.
class StagedOutputs {
 public:
  std::filesystem::path Stage(const std::filesystem::path &path);
  void Commit();
  const std::vector<std::filesystem::path> &finals() const { return finals_; }

 private:
  std::vector<std::filesystem::path> finals_;
};

// Machine-readable record of one command: config, input/output digests,
// counts and status. Only the timestamps vary between identical runs.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void SetConfig(nlohmann::json config) { body_["config"] = std::move(config); }
  void AddInput(const std::filesystem::path &path);
  void AddOutput(const std::filesystem::path &path);
  void SetCount(const std::string &name, nlohmann::json value) {
    body_["counts"][name] = std::move(value);
  }
  // Writes the manifest with status "ok" or "failed".
  void Write(const std::filesystem::path &path, bool ok,
             const std::string &error = "");
  const nlohmann::json &body() const { return body_; }

 private:
  nlohmann::json body_;
};

struct PipelineConfig {
  std::string corpus = "aae";
  std::filesystem::path input;
  std::filesystem::path out_dir;
  AnlVariant variant = AnlVariant::kAcre;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> filter;
  std::optional<std::filesystem::path> generations;
  std::optional<std::filesystem::path> fine_labels;
  std::uint64_t seed = 0;
  int jobs = 1;

  // Keys: corpus, in, out_dir, variant, lexicon, filter, generations,
  // fine_labels, seed, jobs. Relative paths resolve against `base`.
  static PipelineConfig FromJson(const nlohmann::json &record,
                                 const std::filesystem::path &base = {});
  nlohmann::json ToJson() const;
  // Checks referenced files and the corpus/variant combination.
  void Validate() const;
};

struct RunSummary {
  EvalReport report;
  nlohmann::json manifest;
};

// ingest -> marker extraction and lexicon -> (marker annotation) -> encode
// -> decode generations (gold targets when none are given) -> score.
// Artifacts land in config.out_dir together with manifest.json.
RunSummary RunPipeline(const PipelineConfig &config);

}  // namespace anlforge

#endif  // ANLFORGE_PIPELINE_H_
