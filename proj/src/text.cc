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

#include "anlforge/text.h"

#include <stdexcept>
#include <utility>

#include "anlforge/errors.h"

namespace anlforge {

namespace {

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsWordChar(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

bool IsJoiner(unsigned char c) { return c == '-' || c == '\''; }

bool IsTerminal(const std::string &surface) {
  return surface == "." || surface == "!" || surface == "?";
}

bool StartsCapitalized(const std::string &surface) {
  if (surface.empty()) return false;
  unsigned char c = surface[0];
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

}  // namespace

ArgText::ArgText(std::string doc_id, std::string text, std::vector<Token> tokens,
                 std::vector<TokenSpan> sentences)
    : doc_id_(std::move(doc_id)),
      text_(std::move(text)),
      tokens_(std::move(tokens)),
      sentences_(std::move(sentences)) {
  std::size_t cursor = 0;
  for (const Token &token : tokens_) {
    if (token.char_start < cursor || token.char_end <= token.char_start ||
        token.char_end > text_.size()) {
      throw ValidationError("token offsets out of order in " + doc_id_);
    }
    for (std::size_t i = cursor; i < token.char_start; ++i) {
      if (!IsSpace(text_[i])) {
        throw ValidationError("untokenized text at offset " +
                              std::to_string(i) + " in " + doc_id_);
      }
    }
    if (text_.compare(token.char_start, token.char_end - token.char_start,
                      token.surface) != 0) {
      throw ValidationError("token surface mismatch at offset " +
                            std::to_string(token.char_start) + " in " +
                            doc_id_);
    }
    cursor = token.char_end;
  }
  for (std::size_t i = cursor; i < text_.size(); ++i) {
    if (!IsSpace(text_[i])) {
      throw ValidationError("untokenized trailing text in " + doc_id_);
    }
  }
  int expected = 0;
  for (const TokenSpan &s : sentences_) {
    if (s.start != expected || s.end < s.start) {
      throw ValidationError("sentences do not partition tokens in " + doc_id_);
    }
    expected = s.end + 1;
  }
  if (expected != size()) {
    throw ValidationError("sentences do not cover all tokens in " + doc_id_);
  }
}

int ArgText::SentenceOf(int token_index) const {
  for (int i = 0; i < static_cast<int>(sentences_.size()); ++i) {
    if (sentences_[i].Contains(token_index)) return i;
  }
  return -1;
}

std::vector<Token> TokenizeRaw(std::string_view text) {
  std::vector<Token> tokens;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    unsigned char c = text[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (IsWordChar(c)) {
      ++i;
      while (i < n) {
        unsigned char d = text[i];
        if (IsWordChar(d)) {
          ++i;
        } else if (IsJoiner(d) && i + 1 < n &&
                   IsWordChar(static_cast<unsigned char>(text[i + 1]))) {
          i += 2;
        } else {
          break;
        }
      }
    } else {
      ++i;
    }
    tokens.push_back({std::string(text.substr(start, i - start)), start, i});
  }
  return tokens;
}

std::vector<std::string> TokenSurfaces(std::string_view text) {
  std::vector<std::string> out;
  for (Token &t : TokenizeRaw(text)) out.push_back(std::move(t.surface));
  return out;
}

std::vector<TokenSpan> SplitSentences(const std::vector<Token> &tokens) {
  std::vector<TokenSpan> sentences;
  const int n = static_cast<int>(tokens.size());
  int start = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (!IsTerminal(tokens[i].surface)) continue;
    const Token &next = tokens[i + 1];
    if (IsTerminal(next.surface)) continue;
    bool spaced = next.char_start > tokens[i].char_end;
    if (spaced && StartsCapitalized(next.surface)) {
      sentences.push_back({start, i});
      start = i + 1;
    }
  }
  if (n > 0) sentences.push_back({start, n - 1});
  return sentences;
}

ArgText Tokenize(std::string_view text, std::string doc_id) {
  std::vector<Token> tokens = TokenizeRaw(text);
  std::vector<TokenSpan> sentences = SplitSentences(tokens);
  return ArgText(std::move(doc_id), std::string(text), std::move(tokens),
                 std::move(sentences));
}

std::string SpanText(const ArgText &text, TokenSpan span) {
  if (span.start < 0 || span.end < span.start || span.end >= text.size()) {
    throw std::out_of_range("span (" + std::to_string(span.start) + "," +
                            std::to_string(span.end) + ") outside " +
                            std::to_string(text.size()) + " tokens");
  }
  std::size_t begin = text.token(span.start).char_start;
  std::size_t end = text.token(span.end).char_end;
  return text.text().substr(begin, end - begin);
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (IsSpace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace anlforge
