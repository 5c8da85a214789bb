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

#include "anlforge/ingest.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "spdlog/spdlog.h"

#include "anlforge/errors.h"

namespace anlforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> Split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string StripCr(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
  return s;
}

std::vector<fs::path> FilesWithExtension(const fs::path &root,
                                         const std::string &ext) {
  if (!fs::is_directory(root)) throw IoError("not a directory: " + root.string());
  std::vector<fs::path> out;
  for (const auto &entry : fs::directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ext) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Warn(IngestResult *result, std::string message) {
  spdlog::warn("{}", message);
  result->warnings.push_back(std::move(message));
}

// Brat relation names ("supports") or schema names ("Support").
std::string MapRelationType(const std::string &raw, const LabelSchema &schema,
                            const std::string &where) {
  if (schema.HasRelationType(raw)) return raw;
  for (const std::string &t : schema.relation_types()) {
    std::string l = Lower(t);
    if (Lower(raw) == l || Lower(raw) == l + "s") return t;
  }
  throw SchemaError(where + ": unknown relation label '" + raw + "'");
}

struct StandoffComponent {
  std::string key;
  std::string type;
  std::size_t start;
  std::size_t end;
};

struct StandoffRelation {
  std::string key;
  std::string type;
  std::string head;
  std::string tail;
};

void FinishDocument(IngestResult *result, ArgText text,
                    std::vector<ArgComponent> components,
                    std::vector<ArgRelation> relations,
                    const LabelSchema &schema, bool expect_tree) {
  ArgGraph graph(text.doc_id(), std::move(components), std::move(relations));
  graph.Validate(text, &schema);
  if (expect_tree && !graph.IsForest()) {
    ++result->non_tree_documents;
    Warn(result, text.doc_id() + ": relations do not form a tree");
  }
  result->docs.push_back({std::move(text), std::move(graph)});
}

std::map<std::pair<std::string, std::string>, std::string> ReadFineLabels(
    const fs::path &path) {
  std::map<std::pair<std::string, std::string>, std::string> labels;
  std::istringstream in(ReadFile(path));
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = StripCr(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 3) {
      throw IoError(path.string() + ":" + std::to_string(number) +
                    ": expected essay<TAB>T-id<TAB>label");
    }
    labels[{f[0], f[1]}] = f[2];
  }
  return labels;
}

}  // namespace

CorpusDescriptor CorpusDescriptor::ByName(std::string_view name) {
  std::string key = Lower(name);
  if (key == "aae") return {CorpusKind::kAae, "aae", LabelSchema::Aae(), true};
  if (key == "aae-fg") {
    return {CorpusKind::kAaeFg, "aae-fg", LabelSchema::AaeFg(), true};
  }
  if (key == "cdcp") return {CorpusKind::kCdcp, "cdcp", LabelSchema::Cdcp(), false};
  if (key == "dm") return {CorpusKind::kDmPairs, "dm", std::nullopt, true};
  throw SchemaError("unknown corpus '" + std::string(name) +
                    "' (expected aae, aae-fg, cdcp or dm)");
}

TokenSpan AlignCharSpan(const ArgText &text, std::size_t char_start,
                        std::size_t char_end, bool *snapped) {
  int first = -1;
  int last = -1;
  for (int i = 0; i < text.size(); ++i) {
    const Token &t = text.token(i);
    if (t.char_end > char_start && t.char_start < char_end) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) {
    throw AlignmentError(text.doc_id() + ": character span [" +
                         std::to_string(char_start) + "," +
                         std::to_string(char_end) + ") covers no token");
  }
  *snapped = text.token(first).char_start < char_start ||
             text.token(last).char_end > char_end;
  return {first, last};
}

std::vector<Paragraph> SplitParagraphs(std::string_view essay) {
  std::vector<Paragraph> out;
  std::size_t pos = 0;
  bool prompt = true;
  while (pos <= essay.size()) {
    std::size_t nl = essay.find('\n', pos);
    if (nl == std::string_view::npos) nl = essay.size();
    std::string_view line = essay.substr(pos, nl - pos);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) {
      ++lead;
    }
    if (lead < line.size()) {
      if (prompt) {
        prompt = false;
      } else {
        out.push_back({pos + lead, std::string(line.substr(lead))});
      }
    }
    pos = nl + 1;
  }
  return out;
}

IngestResult ReadStandoffCorpus(const fs::path &root, const LabelSchema &schema,
                                const std::optional<fs::path> &fine_labels) {
  std::map<std::pair<std::string, std::string>, std::string> remap;
  if (fine_labels) remap = ReadFineLabels(*fine_labels);

  IngestResult result;
  for (const fs::path &txt : FilesWithExtension(root, ".txt")) {
    const std::string stem = txt.stem().string();
    fs::path ann_path = txt;
    ann_path.replace_extension(".ann");
    if (!fs::exists(ann_path)) {
      throw IoError("missing annotation file for " + txt.string());
    }
    const std::string essay = ReadFile(txt);
    std::vector<Paragraph> paragraphs = SplitParagraphs(essay);

    std::vector<StandoffComponent> comps;
    std::vector<StandoffRelation> rels;
    std::set<std::string> dropped;
    std::istringstream ann(ReadFile(ann_path));
    std::string line;
    int number = 0;
    while (std::getline(ann, line)) {
      ++number;
      line = StripCr(line);
      if (line.empty()) continue;
      const std::string where = ann_path.filename().string() + ":" + std::to_string(number);
      std::vector<std::string> f = Split(line, '\t');
      if (line[0] == 'T') {
        if (f.size() < 2) throw IoError(where + ": malformed text-bound line");
        std::istringstream spec(f[1]);
        std::string type;
        spec >> type;
        std::string rest;
        std::getline(spec, rest);
        // Discontinuous spans "a b;c d" are collapsed to their hull.
        std::size_t lo = std::string::npos, hi = 0;
        for (std::string &frag : Split(rest, ';')) {
          std::istringstream nums(frag);
          std::size_t a, b;
          if (!(nums >> a >> b)) throw IoError(where + ": bad offsets");
          lo = std::min(lo, a);
          hi = std::max(hi, b);
        }
        if (rest.find(';') != std::string::npos) {
          Warn(&result, where + ": discontinuous span collapsed");
        }
        auto fine = remap.find({stem, f[0]});
        if (fine_labels) {
          if (fine == remap.end()) {
            throw SchemaError(where + ": no fine-grained label for " + f[0]);
          }
          type = fine->second;
        }
        if (!schema.HasComponentType(type)) {
          throw SchemaError(where + ": unknown component label '" + type + "'");
        }
        comps.push_back({f[0], type, lo, hi});
      } else if (line[0] == 'R') {
        if (f.size() < 2) throw IoError(where + ": malformed relation line");
        std::istringstream spec(f[1]);
        std::string type, arg1, arg2;
        spec >> type >> arg1 >> arg2;
        if (arg1.rfind("Arg1:", 0) != 0 || arg2.rfind("Arg2:", 0) != 0) {
          throw IoError(where + ": relation arguments must be Arg1:/Arg2:");
        }
        rels.push_back({f[0], MapRelationType(type, schema, where),
                        arg1.substr(5), arg2.substr(5)});
      }
      // Attribute (A), note (#) and other lines carry nothing we use.
    }

    for (std::size_t p = 0; p < paragraphs.size(); ++p) {
      char suffix[16];
      std::snprintf(suffix, sizeof(suffix), "-p%02zu", p + 1);
      const Paragraph &para = paragraphs[p];
      ArgText text = Tokenize(para.text, stem + suffix);
      const std::size_t begin = para.offset;
      const std::size_t end = para.offset + para.text.size();

      std::vector<ArgComponent> components;
      std::map<std::string, int> index;
      for (const StandoffComponent &c : comps) {
        if (c.start < begin || c.start >= end) continue;
        if (c.end > end) {
          throw AlignmentError(stem + ": component " + c.key + " at offset " +
                               std::to_string(c.start) +
                               " crosses a paragraph boundary");
        }
        bool snapped = false;
        TokenSpan span;
        try {
          span = AlignCharSpan(text, c.start - begin, c.end - begin, &snapped);
        } catch (const AlignmentError &) {
          throw AlignmentError(stem + ": component " + c.key + " at offset " +
                               std::to_string(c.start) + " covers no token");
        }
        if (snapped) {
          Warn(&result, stem + ": component " + c.key + " at offset " +
                            std::to_string(c.start) +
                            " snapped to token boundaries");
        }
        index[c.key] = static_cast<int>(components.size());
        components.push_back({0, c.type, span});
      }
      std::vector<ArgRelation> relations;
      for (const StandoffRelation &r : rels) {
        auto h = index.find(r.head);
        auto t = index.find(r.tail);
        if (h == index.end() && t == index.end()) continue;
        if (h == index.end() || t == index.end()) {
          dropped.insert(r.key);
          continue;
        }
        relations.push_back({r.type, h->second, t->second});
      }
      FinishDocument(&result, std::move(text), std::move(components),
                     std::move(relations), schema, /*expect_tree=*/true);
    }
    for (const std::string &key : dropped) {
      Warn(&result, stem + ": relation " + key + " crosses paragraphs and was dropped");
    }
    // Components that fell outside every paragraph (e.g. in the prompt).
    for (const StandoffComponent &c : comps) {
      bool inside = std::any_of(paragraphs.begin(), paragraphs.end(),
                                [&](const Paragraph &p) {
                                  return c.start >= p.offset &&
                                         c.start < p.offset + p.text.size();
                                });
      if (!inside) {
        Warn(&result, stem + ": component " + c.key + " at offset " +
                          std::to_string(c.start) + " lies outside paragraphs");
      }
    }
  }
  std::sort(result.docs.begin(), result.docs.end(),
            [](const Document &a, const Document &b) {
              return a.text.doc_id() < b.text.doc_id();
            });
  return result;
}

IngestResult ReadCdcpCorpus(const fs::path &root) {
  const LabelSchema schema = LabelSchema::Cdcp();
  IngestResult result;
  for (const fs::path &txt : FilesWithExtension(root, ".txt")) {
    const std::string stem = txt.stem().string();
    fs::path ann_path = root / (stem + ".ann.json");
    if (!fs::exists(ann_path)) {
      throw IoError("missing annotation file for " + txt.string());
    }
    json ann;
    try {
      ann = json::parse(ReadFile(ann_path));
    } catch (const json::parse_error &e) {
      throw IoError(ann_path.string() + ": " + e.what());
    }
    ArgText text = Tokenize(ReadFile(txt), stem);
    try {
      const json &offsets = ann.at("prop_offsets");
      const json &labels = ann.at("prop_labels");
      if (offsets.size() != labels.size()) {
        throw IoError(ann_path.string() + ": prop_offsets/prop_labels differ in length");
      }
      std::vector<ArgComponent> components;
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        std::string type = labels[i].get<std::string>();
        if (!type.empty()) {
          type = Lower(type);
          type[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
        }
        if (!schema.HasComponentType(type)) {
          throw SchemaError(stem + ": unknown component label '" +
                            labels[i].get<std::string>() + "'");
        }
        std::size_t cs = offsets[i].at(0).get<std::size_t>();
        std::size_t ce = offsets[i].at(1).get<std::size_t>();
        bool snapped = false;
        TokenSpan span = AlignCharSpan(text, cs, ce, &snapped);
        if (snapped) {
          Warn(&result, stem + ": proposition " + std::to_string(i) +
                            " at offset " + std::to_string(cs) +
                            " snapped to token boundaries");
        }
        components.push_back({0, type, span});
      }
      std::vector<ArgRelation> relations;
      auto read_links = [&](const char *key, const std::string &type) {
        for (const json &link : ann.value(key, json::array())) {
          int from = link.at(0).at(0).get<int>();
          int to = link.at(0).at(1).get<int>();
          int target = link.at(1).get<int>();
          // A source range stands for each proposition in it.
          for (int head = from; head <= to; ++head) {
            relations.push_back({type, head, target});
          }
        }
      };
      read_links("reasons", "Reason");
      read_links("evidences", "Evidence");
      FinishDocument(&result, std::move(text), std::move(components),
                     std::move(relations), schema, /*expect_tree=*/false);
    } catch (const json::exception &e) {
      throw IoError(ann_path.string() + ": " + e.what());
    }
  }
  std::sort(result.docs.begin(), result.docs.end(),
            [](const Document &a, const Document &b) {
              return a.text.doc_id() < b.text.doc_id();
            });
  return result;
}

DmReadResult ReadDmPairs(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  DmReadResult result;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = StripCr(line);
    if (line.empty()) continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 3 || f[0].empty() || f[1].empty() || f[2].empty()) {
      ++result.skipped;
      continue;
    }
    std::string sen2 = f[1];
    const std::string &dm = f[2];
    std::size_t lead = sen2.find_first_not_of(' ');
    if (lead == std::string::npos ||
        Lower(sen2.substr(lead, dm.size())) != Lower(dm)) {
      throw ValidationError(path.string() + ":" + std::to_string(number) +
                            ": '" + dm + "' does not start sentence 2");
    }
    std::string rest = sen2.substr(lead + dm.size());
    std::size_t start = rest.find_first_not_of(' ');
    if (start == std::string::npos) {
      ++result.skipped;
      continue;
    }
    result.pairs.push_back({f[0], rest.substr(start), dm});
  }
  return result;
}

json DmPairToJson(const DmPair &pair) {
  return {{"sen1", pair.sen1}, {"sen2", pair.sen2}, {"dm", pair.dm}};
}

DmPair DmPairFromJson(const json &record) {
  try {
    return {record.at("sen1").get<std::string>(),
            record.at("sen2").get<std::string>(),
            record.at("dm").get<std::string>()};
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed DM pair record: ") + e.what());
  }
}

std::map<std::string, int> DmHistogram(const std::vector<DmPair> &pairs) {
  std::map<std::string, int> histogram;
  for (const DmPair &p : pairs) ++histogram[p.dm];
  return histogram;
}

}  // namespace anlforge
