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

#include "anlforge/anl_codec.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "anlforge/errors.h"
#include "anlforge/record.h"

namespace anlforge {

namespace {

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// ---------------------------------------------------------------------------
// Lexical structure shared by Decode and StripSymbols.

enum class Sym { kNone, kOpen, kClose, kSep, kMarkerOpen, kMarkerClose };

Sym SymbolAt(std::string_view s, std::size_t i, bool markers,
             std::size_t *length) {
  *length = 1;
  char c = s[i];
  if (c == '[') return Sym::kOpen;
  if (c == ']') return Sym::kClose;
  if (c == '|') return Sym::kSep;
  if (markers && i + 1 < s.size()) {
    if (c == '(' && s[i + 1] == '(') {
      *length = 2;
      return Sym::kMarkerOpen;
    }
    if (c == ')' && s[i + 1] == ')') {
      *length = 2;
      return Sym::kMarkerClose;
    }
  }
  return Sym::kNone;
}

const char *SymName(Sym s) {
  switch (s) {
    case Sym::kOpen: return "'['";
    case Sym::kClose: return "']'";
    case Sym::kSep: return "'|'";
    case Sym::kMarkerOpen: return "'(('";
    case Sym::kMarkerClose: return "'))'";
    case Sym::kNone: break;
  }
  return "text";
}

struct Piece {
  enum Type { kPlain, kGroup, kMarker } type;
  std::vector<std::string> fields;  // kPlain/kMarker use fields[0]
  std::size_t location;
};

// Splits a target into plain text, bracket groups and marker groups.
// Structurally broken regions are reported as format errors and left out.
std::vector<Piece> Lex(std::string_view target, bool markers,
                       std::vector<ParseError> *errors) {
  // kOrphan: the rest of a group whose opening bracket is missing.
  enum class State { kTop, kGroup, kMarker, kOrphan };
  std::vector<Piece> pieces;
  State state = State::kTop;
  Piece current{Piece::kPlain, {""}, 0};

  auto format_error = [&](std::string detail, std::size_t at) {
    if (errors != nullptr) {
      errors->push_back({ErrorKind::kInvalidFormat, std::move(detail), at});
    }
  };
  auto flush_plain = [&]() {
    if (!current.fields[0].empty()) pieces.push_back(current);
  };
  auto begin = [&](Piece::Type type, std::size_t at) {
    current = Piece{type, {""}, at};
    state = type == Piece::kGroup ? State::kGroup
            : type == Piece::kMarker ? State::kMarker
                                     : State::kTop;
  };

  std::size_t i = 0;
  while (i < target.size()) {
    std::size_t length = 1;
    Sym sym = SymbolAt(target, i, markers, &length);
    switch (state) {
      case State::kTop:
        if (sym == Sym::kNone) {
          if (current.fields[0].empty()) current.location = i;
          current.fields[0].push_back(target[i]);
        } else if (sym == Sym::kOpen || sym == Sym::kMarkerOpen) {
          flush_plain();
          begin(sym == Sym::kOpen ? Piece::kGroup : Piece::kMarker, i);
        } else if (sym == Sym::kSep) {
          // Label fields without an opening bracket: keep the text before it
          // (it is the span, which is source text) and skip to the ']'.
          format_error("group without opening '['", i);
          flush_plain();
          begin(Piece::kPlain, i + length);
          state = State::kOrphan;
        } else {
          format_error(std::string("stray ") + SymName(sym), i);
          flush_plain();
          begin(Piece::kPlain, i + length);
        }
        break;
      case State::kOrphan:
        if (sym == Sym::kClose) {
          begin(Piece::kPlain, i + length);
        } else if (sym == Sym::kOpen || sym == Sym::kMarkerOpen) {
          begin(sym == Sym::kOpen ? Piece::kGroup : Piece::kMarker, i);
        }
        break;
      case State::kGroup:
        if (sym == Sym::kNone) {
          current.fields.back().push_back(target[i]);
        } else if (sym == Sym::kSep) {
          current.fields.emplace_back();
        } else if (sym == Sym::kClose) {
          pieces.push_back(current);
          begin(Piece::kPlain, i + length);
        } else {
          format_error(std::string("unclosed group before ") + SymName(sym),
                       current.location);
          if (sym == Sym::kOpen) {
            begin(Piece::kGroup, i);
          } else if (sym == Sym::kMarkerOpen) {
            begin(Piece::kMarker, i);
          } else {
            begin(Piece::kPlain, i + length);
          }
        }
        break;
      case State::kMarker:
        if (sym == Sym::kNone) {
          current.fields[0].push_back(target[i]);
        } else if (sym == Sym::kMarkerClose) {
          pieces.push_back(current);
          begin(Piece::kPlain, i + length);
        } else {
          format_error(std::string("unclosed marker before ") + SymName(sym),
                       current.location);
          if (sym == Sym::kOpen) {
            begin(Piece::kGroup, i);
          } else if (sym == Sym::kMarkerOpen) {
            begin(Piece::kMarker, i);
          } else {
            begin(Piece::kPlain, i + length);
          }
        }
        break;
    }
    i += length;
  }
  if (state == State::kTop) {
    flush_plain();
  } else if (state != State::kOrphan) {
    format_error(state == State::kGroup ? "unclosed group at end of sequence"
                                        : "unclosed marker at end of sequence",
                 current.location);
  }
  return pieces;
}

// Leftmost occurrence of `needle` in the token surfaces of `text` starting at
// or after `from`; -1 if absent.
int FindTokens(const ArgText &text, const std::vector<std::string> &needle,
               int from) {
  const int n = text.size();
  const int m = static_cast<int>(needle.size());
  if (m == 0) return -1;
  for (int start = std::max(from, 0); start + m <= n; ++start) {
    bool match = true;
    for (int k = 0; k < m && match; ++k) {
      match = text.token(start + k).surface == needle[k];
    }
    if (match) return start;
  }
  return -1;
}

std::vector<std::string> SpanSurfaces(const ArgText &text, TokenSpan span) {
  std::vector<std::string> out;
  for (int i = span.start; i <= span.end; ++i) out.push_back(text.token(i).surface);
  return out;
}

bool IsIdToken(std::string_view token, std::string_view prefix) {
  if (token.size() <= prefix.size() || token.substr(0, prefix.size()) != prefix) {
    return false;
  }
  for (std::size_t i = prefix.size(); i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  }
  return token[prefix.size()] != '0';
}

struct DecodeMode {
  AnlVariant variant = AnlVariant::kAcre;
  const LabelSchema *schema = nullptr;
  // "[ span | marker ]" groups become markers and nothing else is allowed.
  bool bracket_markers = false;
};

struct PendingRelation {
  int head;
  std::string type;
  std::string tail;
  std::size_t location;
};

ParseOutcome DecodeImpl(std::string_view target, const ArgText &text,
                        const DecodeMode &mode) {
  ParseOutcome outcome;
  std::vector<ParseError> &errors = outcome.errors;
  const bool paren_markers = mode.variant == AnlVariant::kMeAcre &&
                             !mode.bracket_markers;
  const bool abbreviated = mode.variant == AnlVariant::kAbbreviated &&
                           !mode.bracket_markers;
  const bool relations_allowed = mode.variant != AnlVariant::kComponentOnly &&
                                 !mode.bracket_markers;

  auto error = [&](ErrorKind kind, std::string detail, std::size_t at) {
    errors.push_back({kind, std::move(detail), at});
  };

  std::vector<Piece> pieces = Lex(target, paren_markers, &errors);

  std::vector<ArgComponent> components;
  std::vector<TokenSpan> markers;
  std::vector<PendingRelation> pending;
  std::map<std::string, int> id_registry;
  int cursor = 0;

  auto align = [&](const std::string &fragment, TokenSpan *span) {
    std::vector<std::string> surfaces = TokenSurfaces(fragment);
    int at = FindTokens(text, surfaces, cursor);
    if (at < 0) return false;
    *span = {at, at + static_cast<int>(surfaces.size()) - 1};
    return true;
  };

  for (Piece &piece : pieces) {
    if (piece.type == Piece::kPlain) {
      if (TokenSurfaces(piece.fields[0]).empty()) continue;
      TokenSpan span;
      if (align(piece.fields[0], &span)) {
        cursor = span.end + 1;
      } else {
        error(ErrorKind::kInvalidToken,
              "text not found in source: '" + Trim(piece.fields[0]) + "'",
              piece.location);
      }
      continue;
    }

    if (piece.type == Piece::kMarker) {
      std::string body = Trim(piece.fields[0]);
      TokenSpan span;
      if (body.empty()) {
        error(ErrorKind::kInvalidFormat, "empty marker", piece.location);
      } else if (!align(body, &span)) {
        error(ErrorKind::kInvalidToken, "marker not found in source: '" + body + "'",
              piece.location);
      } else {
        markers.push_back(span);
        cursor = span.end + 1;
      }
      continue;
    }

    // Bracket group: span | label [| rel = tail]...
    for (std::string &f : piece.fields) f = Trim(f);
    const std::vector<std::string> &fields = piece.fields;
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      error(ErrorKind::kInvalidFormat, "group needs a span and a label",
            piece.location);
      continue;
    }
    std::vector<std::pair<std::string, std::string>> rels;
    bool well_formed = true;
    for (std::size_t f = 2; f < fields.size(); ++f) {
      std::size_t eq = fields[f].find('=');
      if (eq == std::string::npos) {
        well_formed = false;
        break;
      }
      std::string rtype = Trim(std::string_view(fields[f]).substr(0, eq));
      std::string tail = Trim(std::string_view(fields[f]).substr(eq + 1));
      if (rtype.empty() || tail.empty()) {
        well_formed = false;
        break;
      }
      rels.emplace_back(std::move(rtype), std::move(tail));
    }
    if (!well_formed) {
      error(ErrorKind::kInvalidFormat, "malformed relation segment",
            piece.location);
      continue;
    }
    if (!rels.empty() && !relations_allowed) {
      error(ErrorKind::kInvalidFormat,
            "relation segment not allowed in this format", piece.location);
      continue;
    }

    if (mode.bracket_markers) {
      TokenSpan span;
      if (fields[1] != SymbolSet::kMarkerLabel) {
        error(ErrorKind::kInvalidToken, "unknown label '" + fields[1] + "'",
              piece.location);
      } else if (!align(fields[0], &span)) {
        error(ErrorKind::kInvalidToken,
              "marker not found in source: '" + fields[0] + "'", piece.location);
      } else {
        markers.push_back(span);
        cursor = span.end + 1;
      }
      continue;
    }

    std::string type = fields[1];
    std::string id_token;
    if (abbreviated) {
      std::size_t space = type.find_last_of(' ');
      if (space == std::string::npos) {
        error(ErrorKind::kInvalidFormat, "label lacks an ID token",
              piece.location);
        continue;
      }
      id_token = type.substr(space + 1);
      type = Trim(std::string_view(type).substr(0, space));
    }
    if (!mode.schema->HasComponentType(type)) {
      error(ErrorKind::kInvalidToken, "unknown component type '" + type + "'",
            piece.location);
      continue;
    }
    if (abbreviated) {
      if (!IsIdToken(id_token, mode.schema->IdPrefix(type))) {
        error(ErrorKind::kInvalidToken,
              "ID token '" + id_token + "' does not fit type " + type,
              piece.location);
        continue;
      }
      if (id_registry.count(id_token) != 0) {
        error(ErrorKind::kInvalidFormat, "duplicate ID token " + id_token,
              piece.location);
        continue;
      }
    }
    TokenSpan span;
    if (!align(fields[0], &span)) {
      error(ErrorKind::kInvalidToken,
            "component span not found in source: '" + fields[0] + "'",
            piece.location);
      continue;
    }
    cursor = span.end + 1;
    const int index = static_cast<int>(components.size());
    components.push_back({index, type, span});
    if (abbreviated) id_registry[id_token] = index;
    for (auto &[rtype, tail] : rels) {
      if (!mode.schema->HasRelationType(rtype)) {
        error(ErrorKind::kInvalidToken, "unknown relation type '" + rtype + "'",
              piece.location);
        continue;
      }
      pending.push_back({index, rtype, tail, piece.location});
    }
  }

  // Relation tails may point forward, so they are resolved after the pass.
  std::set<std::tuple<std::string, int, int>> seen;
  std::vector<ArgRelation> relations;
  for (const PendingRelation &rel : pending) {
    int tail = -1;
    bool self_reference = false;
    if (abbreviated) {
      auto it = id_registry.find(rel.tail);
      if (it != id_registry.end()) tail = it->second;
    } else {
      std::vector<std::string> surfaces = TokenSurfaces(rel.tail);
      for (const ArgComponent &c : components) {
        if (SpanSurfaces(text, c.span) != surfaces) continue;
        if (c.id == rel.head) {
          self_reference = true;
          continue;
        }
        tail = c.id;
        break;
      }
    }
    if (tail < 0) {
      if (self_reference) {
        error(ErrorKind::kInvalidComponent,
              "relation tail is the head component itself", rel.location);
      } else if (FindTokens(text, TokenSurfaces(rel.tail), 0) >= 0) {
        error(ErrorKind::kInvalidComponent,
              "relation tail '" + rel.tail + "' is not a component",
              rel.location);
      } else {
        error(ErrorKind::kInvalidToken,
              "relation tail '" + rel.tail + "' not found in source",
              rel.location);
      }
      continue;
    }
    if (tail == rel.head) {
      error(ErrorKind::kInvalidComponent,
            "relation tail is the head component itself", rel.location);
      continue;
    }
    if (seen.emplace(rel.type, rel.head, tail).second) {
      relations.push_back({rel.type, rel.head, tail});
    }
  }

  outcome.graph = ArgGraph(text.doc_id(), std::move(components),
                           std::move(relations), std::move(markers));
  return outcome;
}

}  // namespace

std::string_view VariantName(AnlVariant variant) {
  switch (variant) {
    case AnlVariant::kComponentOnly: return "comp";
    case AnlVariant::kAcre: return "acre";
    case AnlVariant::kMeAcre: return "me";
    case AnlVariant::kAbbreviated: return "abbr";
  }
  return "acre";
}

AnlVariant ParseVariant(std::string_view name) {
  if (name == "comp") return AnlVariant::kComponentOnly;
  if (name == "acre") return AnlVariant::kAcre;
  if (name == "me") return AnlVariant::kMeAcre;
  if (name == "abbr") return AnlVariant::kAbbreviated;
  throw SchemaError("unknown variant '" + std::string(name) +
                    "' (expected comp, acre, me or abbr)");
}

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidToken: return "INVALID_TOKEN";
    case ErrorKind::kInvalidComponent: return "INVALID_COMPONENT";
    case ErrorKind::kInvalidFormat: return "INVALID_FORMAT";
  }
  return "INVALID_FORMAT";
}

ErrorKind ParseErrorKind(std::string_view name) {
  if (name == "INVALID_TOKEN") return ErrorKind::kInvalidToken;
  if (name == "INVALID_COMPONENT") return ErrorKind::kInvalidComponent;
  if (name == "INVALID_FORMAT") return ErrorKind::kInvalidFormat;
  throw SchemaError("unknown error kind '" + std::string(name) + "'");
}

bool ParseOutcome::HasError(ErrorKind kind) const {
  return std::any_of(errors.begin(), errors.end(),
                     [kind](const ParseError &e) { return e.kind == kind; });
}

std::vector<std::string> AssignIdTokens(const ArgGraph &graph,
                                        const LabelSchema &schema) {
  std::map<std::string, int> counters;
  std::vector<std::string> ids;
  for (const ArgComponent &c : graph.components()) {
    ids.push_back(schema.IdPrefix(c.type) + std::to_string(++counters[c.type]));
  }
  return ids;
}

AnlSequence Encode(const ArgGraph &graph, const ArgText &text,
                   AnlVariant variant, const LabelSchema &schema) {
  graph.Validate(text, &schema);

  const bool with_relations = variant != AnlVariant::kComponentOnly;
  std::vector<std::string> ids;
  if (variant == AnlVariant::kAbbreviated) ids = AssignIdTokens(graph, schema);

  // (span, component index or -1 for a marker), in document order.
  std::vector<std::pair<TokenSpan, int>> items;
  for (const ArgComponent &c : graph.components()) items.emplace_back(c.span, c.id);
  if (variant == AnlVariant::kMeAcre) {
    for (const TokenSpan &m : graph.markers()) items.emplace_back(m, -1);
  }
  std::sort(items.begin(), items.end());

  const std::string &raw = text.text();
  std::string target;
  std::size_t cursor = 0;
  for (const auto &[span, index] : items) {
    std::size_t begin = text.token(span.start).char_start;
    target.append(raw, cursor, begin - cursor);
    std::string surface = SpanText(text, span);
    if (index < 0) {
      target += "(( " + surface + " ))";
    } else {
      const ArgComponent &c = graph.components()[index];
      target += "[ " + surface + " | " + c.type;
      if (!ids.empty()) target += " " + ids[index];
      if (with_relations) {
        std::vector<ArgRelation> out = graph.OutgoingRelations(index);
        std::stable_sort(out.begin(), out.end(),
                         [&](const ArgRelation &a, const ArgRelation &b) {
                           return std::tie(a.tail, a.type) <
                                  std::tie(b.tail, b.type);
                         });
        for (const ArgRelation &r : out) {
          target += " | " + r.type + " = ";
          target += ids.empty() ? SpanText(text, graph.components()[r.tail].span)
                                : ids[r.tail];
        }
      }
      target += " ]";
    }
    cursor = text.token(span.end).char_end;
  }
  target.append(raw, cursor, std::string::npos);
  return {text.doc_id(), variant, raw, std::move(target)};
}

ParseOutcome Decode(std::string_view target, const ArgText &text,
                    AnlVariant variant, const LabelSchema &schema) {
  DecodeMode mode;
  mode.variant = variant;
  mode.schema = &schema;
  return DecodeImpl(target, text, mode);
}

ParseOutcome DecodeMarkerGroups(std::string_view target, const ArgText &text) {
  DecodeMode mode;
  mode.bracket_markers = true;
  return DecodeImpl(target, text, mode);
}

std::string StripSymbols(std::string_view target) {
  std::string out;
  std::string span;
  bool in_group = false;
  int field = 0;
  std::size_t i = 0;
  while (i < target.size()) {
    std::size_t length = 1;
    Sym sym = SymbolAt(target, i, /*markers=*/true, &length);
    if (sym == Sym::kNone) {
      if (!in_group) {
        out.push_back(target[i]);
      } else if (field == 0) {
        span.push_back(target[i]);
      }
    } else if (sym == Sym::kOpen) {
      if (in_group) out += Trim(span);
      in_group = true;
      field = 0;
      span.clear();
    } else if (sym == Sym::kSep) {
      if (in_group) ++field;
    } else if (sym == Sym::kClose) {
      if (in_group) out += Trim(span);
      in_group = false;
    } else if (!in_group) {
      // Marker braces: drop the brace and the single space padding it.
      if (sym == Sym::kMarkerOpen && i + 2 < target.size() &&
          target[i + 2] == ' ') {
        ++length;
      } else if (sym == Sym::kMarkerClose && !out.empty() &&
                 out.back() == ' ') {
        out.pop_back();
      }
    }
    i += length;
  }
  if (in_group) out += Trim(span);
  return out;
}

nlohmann::json SequenceToJson(const AnlSequence &sequence) {
  return {{"doc_id", sequence.doc_id},
          {"variant", VariantName(sequence.variant)},
          {"input", sequence.input},
          {"target", sequence.target}};
}

AnlSequence SequenceFromJson(const nlohmann::json &record) {
  try {
    return {record.at("doc_id").get<std::string>(),
            ParseVariant(record.at("variant").get<std::string>()),
            record.at("input").get<std::string>(),
            record.at("target").get<std::string>()};
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("malformed sequence record: ") + e.what());
  }
}

nlohmann::json OutcomeToJson(const ParseOutcome &outcome) {
  nlohmann::json record = {{"doc_id", outcome.graph.doc_id()}};
  record.update(GraphToJson(outcome.graph));
  nlohmann::json errors = nlohmann::json::array();
  for (const ParseError &e : outcome.errors) {
    errors.push_back({{"kind", ErrorKindName(e.kind)},
                      {"detail", e.detail},
                      {"location", e.location}});
  }
  record["errors"] = std::move(errors);
  return record;
}

ParseOutcome OutcomeFromJson(const nlohmann::json &record) {
  try {
    const std::string doc_id = record.at("doc_id").get<std::string>();
    ParseOutcome outcome;
    outcome.graph = GraphFromJson(doc_id, record);
    for (const nlohmann::json &e : record.value("errors", nlohmann::json::array())) {
      outcome.errors.push_back({ParseErrorKind(e.at("kind").get<std::string>()),
                                e.value("detail", ""),
                                e.value("location", std::size_t{0})});
    }
    return outcome;
  } catch (const nlohmann::json::exception &e) {
    throw ValidationError(std::string("malformed parse record: ") + e.what());
  }
}

}  // namespace anlforge
