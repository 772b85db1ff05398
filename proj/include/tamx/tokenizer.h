// Copyright 2026 The tamx Authors.
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

#ifndef TAMX_TOKENIZER_H_
#define TAMX_TOKENIZER_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tamx {

enum class TokenClass {
  kFirstCapitalWord,
  kLowercaseWord,
  kMixedWordFirstCapital,
  kWordWithHyphenFirstCapital,
  kWordWithApostropheFirstCapital,
  kAnyNaturalNumber,
  kPunctuation,
  kApostrophe,
  kOther,
};

// Name used by grammar rules, e.g. "first_capital_word".
std::string_view TokenClassName(TokenClass cls);

// Classification is a pure function of the surface.
TokenClass Classify(std::string_view surface);

// Byte offsets into the source line, half-open.
struct CharSpan {
  size_t begin = 0;
  size_t end = 0;
  friend bool operator==(const CharSpan &, const CharSpan &) = default;
};

struct Token {
  std::string surface;
  TokenClass token_class = TokenClass::kOther;
  CharSpan char_span;

  friend bool operator==(const Token &, const Token &) = default;
};

struct SentenceSpan {
  std::string text;
  CharSpan char_span;  // within the source line
  std::vector<Token> tokens;  // char spans relative to the source line
  size_t source_line_index = 0;
};

// Splits a word at its first apostrophe into stem, apostrophe and suffix.
// Words without an apostrophe, or with nothing on one side of it, come back
// as a single token. Spans are offset by `offset`.
std::vector<Token> SplitApostrophe(std::string_view word, size_t offset = 0);

// A word that was split at an apostrophe, exposed again as one token over
// the token range [first, last).
struct CompoundToken {
  size_t first = 0;
  size_t last = 0;  // one past the suffix token
  Token token;
};

// Finds stem/apostrophe/suffix triples whose char spans touch.
std::vector<CompoundToken> ApostropheCompounds(std::string_view source,
                                               const std::vector<Token> &tokens);

class Tokenizer {
 public:
  // Abbreviations are stored lowercase and without the trailing period.
  Tokenizer();
  explicit Tokenizer(std::set<std::string> abbreviations);

  void AddAbbreviation(std::string_view abbreviation);
  const std::set<std::string> &abbreviations() const { return abbreviations_; }

  // Whitespace splitting, punctuation detachment, apostrophe splitting.
  // Char spans are relative to `text` plus `offset`.
  std::vector<Token> Tokenize(std::string_view text, size_t offset = 0) const;

  // Splits at '.', '!' or '?' (plus closing quotes) followed by whitespace
  // and an uppercase letter, unless the period ends a known abbreviation or a
  // single-letter initial.
  std::vector<SentenceSpan> SplitSentences(std::string_view line,
                                           size_t line_index = 0) const;

 private:
  std::set<std::string> abbreviations_;
};

}  // namespace tamx

#endif  // TAMX_TOKENIZER_H_
