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

#ifndef ANLFORGE_TEXT_H_
#define ANLFORGE_TEXT_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace anlforge {

// Inclusive token index range [start, end].
struct TokenSpan {
  int start = 0;
  int end = 0;

  int length() const { return end - start + 1; }
  bool Contains(int index) const { return index >= start && index <= end; }
  bool Overlaps(const TokenSpan &other) const {
    return start <= other.end && other.start <= end;
  }

  auto operator<=>(const TokenSpan &) const = default;
};

struct Token {
  std::string surface;
  // Byte offsets into the owning text, half open: [char_start, char_end).
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  bool operator==(const Token &) const = default;
};

// A paragraph of argumentative text together with its token and sentence
// index. Instances are immutable; the constructor checks that the tokens
// tile the text (up to whitespace) and that the sentences partition the
// token sequence.
class ArgText {
 public:
  ArgText() = default;
  ArgText(std::string doc_id, std::string text, std::vector<Token> tokens,
          std::vector<TokenSpan> sentences);

  const std::string &doc_id() const { return doc_id_; }
  const std::string &text() const { return text_; }
  const std::vector<Token> &tokens() const { return tokens_; }
  const std::vector<TokenSpan> &sentences() const { return sentences_; }
  int size() const { return static_cast<int>(tokens_.size()); }
  const Token &token(int i) const { return tokens_.at(i); }

  // Index of the sentence containing token i, or -1 if out of range.
  int SentenceOf(int token_index) const;

  bool operator==(const ArgText &) const = default;

 private:
  std::string doc_id_;
  std::string text_;
  std::vector<Token> tokens_;
  std::vector<TokenSpan> sentences_;
};

// Deterministic whitespace-and-punctuation tokenizer. Words are maximal runs
// of letters, digits and non-ASCII bytes; a hyphen or apostrophe between two
// word characters stays inside the word. Every other printable ASCII
// character is a token of its own.
std::vector<Token> TokenizeRaw(std::string_view text);

// Surfaces only; convenient for matching fragments of model output.
std::vector<std::string> TokenSurfaces(std::string_view text);

// Rule-based sentence splitter. A sentence ends after a run of terminal
// punctuation (. ! ?) that is followed by whitespace and a token starting
// with an uppercase letter or a digit.
std::vector<TokenSpan> SplitSentences(const std::vector<Token> &tokens);

ArgText Tokenize(std::string_view text, std::string doc_id = "");

// Original surface text between the first token's start and the last token's
// end. Throws std::out_of_range for invalid spans.
std::string SpanText(const ArgText &text, TokenSpan span);

// Collapses whitespace runs to a single space and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

}  // namespace anlforge

#endif  // ANLFORGE_TEXT_H_
