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

#include "anlforge/record.h"

#include <fstream>
#include <sstream>

#include "anlforge/errors.h"

namespace anlforge {

using nlohmann::json;

json GraphToJson(const ArgGraph &graph) {
  json components = json::array();
  for (const ArgComponent &c : graph.components()) {
    components.push_back(
        {{"id", c.id}, {"type", c.type}, {"ts", c.span.start}, {"te", c.span.end}});
  }
  json relations = json::array();
  for (const ArgRelation &r : graph.relations()) {
    relations.push_back({{"type", r.type}, {"head", r.head}, {"tail", r.tail}});
  }
  json markers = json::array();
  for (const TokenSpan &m : graph.markers()) {
    markers.push_back({m.start, m.end});
  }
  return {{"components", components},
          {"relations", relations},
          {"markers", markers}};
}

ArgGraph GraphFromJson(const std::string &doc_id, const json &record) {
  try {
    std::vector<ArgComponent> components;
    std::vector<int> ids;
    for (const json &c : record.value("components", json::array())) {
      components.push_back({0, c.at("type").get<std::string>(),
                            {c.at("ts").get<int>(), c.at("te").get<int>()}});
      ids.push_back(c.at("id").get<int>());
    }
    auto position = [&](int id) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == id) return static_cast<int>(i);
      }
      return -1;
    };
    std::vector<ArgRelation> relations;
    for (const json &r : record.value("relations", json::array())) {
      relations.push_back({r.at("type").get<std::string>(),
                           position(r.at("head").get<int>()),
                           position(r.at("tail").get<int>())});
    }
    std::vector<TokenSpan> markers;
    for (const json &m : record.value("markers", json::array())) {
      markers.push_back({m.at(0).get<int>(), m.at(1).get<int>()});
    }
    return ArgGraph(doc_id, std::move(components), std::move(relations),
                    std::move(markers));
  } catch (const json::exception &e) {
    throw ValidationError(doc_id + ": malformed graph record: " + e.what());
  }
}

json DocumentToJson(const Document &doc) {
  json tokens = json::array();
  for (const Token &t : doc.text.tokens()) {
    tokens.push_back({{"s", t.surface}, {"cs", t.char_start}, {"ce", t.char_end}});
  }
  json sentences = json::array();
  for (const TokenSpan &s : doc.text.sentences()) {
    sentences.push_back({s.start, s.end});
  }
  json record = {{"doc_id", doc.text.doc_id()},
                 {"text", doc.text.text()},
                 {"tokens", tokens},
                 {"sentences", sentences}};
  record.update(GraphToJson(doc.graph));
  return record;
}

Document DocumentFromJson(const json &record) {
  std::string doc_id;
  try {
    doc_id = record.at("doc_id").get<std::string>();
    std::vector<Token> tokens;
    for (const json &t : record.at("tokens")) {
      tokens.push_back({t.at("s").get<std::string>(),
                        t.at("cs").get<std::size_t>(),
                        t.at("ce").get<std::size_t>()});
    }
    std::vector<TokenSpan> sentences;
    for (const json &s : record.at("sentences")) {
      sentences.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
    }
    ArgText text(doc_id, record.at("text").get<std::string>(),
                 std::move(tokens), std::move(sentences));
    ArgGraph graph = GraphFromJson(doc_id, record);
    graph.Validate(text);
    return {std::move(text), std::move(graph)};
  } catch (const json::exception &e) {
    throw ValidationError("malformed document record '" + doc_id +
                          "': " + e.what());
  }
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path &path, const std::string &content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<json> ReadJsonLines(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<json> records;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(json::parse(line));
    } catch (const json::parse_error &e) {
      throw IoError(path.string() + ":" + std::to_string(line_number) + ": " +
                    e.what());
    }
  }
  return records;
}

void WriteJsonLines(const std::filesystem::path &path,
                    const std::vector<json> &records) {
  std::string content;
  for (const json &r : records) {
    content += r.dump();
    content += '\n';
  }
  WriteFile(path, content);
}

std::vector<Document> ReadCorpus(const std::filesystem::path &path) {
  std::vector<Document> docs;
  for (const json &record : ReadJsonLines(path)) {
    docs.push_back(DocumentFromJson(record));
  }
  return docs;
}

void WriteCorpus(const std::filesystem::path &path,
                 const std::vector<Document> &docs) {
  std::vector<json> records;
  records.reserve(docs.size());
  for (const Document &d : docs) records.push_back(DocumentToJson(d));
  WriteJsonLines(path, records);
}

}  // namespace anlforge
