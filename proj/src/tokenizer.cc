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

#include "tamx/tokenizer.h"

#include <utility>

#include "tamx/unicode.h"

namespace tamx {

namespace u = unicode;

std::string_view TokenClassName(TokenClass cls) {
  switch (cls) {
    case TokenClass::kFirstCapitalWord: return "first_capital_word";
    case TokenClass::kLowercaseWord: return "lowercase_word";
    case TokenClass::kMixedWordFirstCapital: return "mixed_word_first_capital";
    case TokenClass::kWordWithHyphenFirstCapital:
      return "word_with_hyphen_first_capital";
    case TokenClass::kWordWithApostropheFirstCapital:
      return "word_with_apostrophe_first_capital";
    case TokenClass::kAnyNaturalNumber: return "any_natural_number";
    case TokenClass::kPunctuation: return "punctuation";
    case TokenClass::kApostrophe: return "apostrophe";
    case TokenClass::kOther: return "other";
  }
  return "other";
}

TokenClass Classify(std::string_view surface) {
  std::u32string cps = u::Decode(surface);
  if (cps.empty()) return TokenClass::kOther;

  bool all_punct = true, all_digits = true, all_lower = true;
  for (char32_t c : cps) {
    if (!u::IsPunctuation(c)) all_punct = false;
    if (!u::IsDigit(c)) all_digits = false;
    if (!u::IsLower(c)) all_lower = false;
  }
  if (all_punct) {
    return cps.size() == 1 && u::IsApostrophe(cps[0]) ? TokenClass::kApostrophe
                                                      : TokenClass::kPunctuation;
  }
  if (all_digits) return TokenClass::kAnyNaturalNumber;
  if (all_lower) return TokenClass::kLowercaseWord;
  if (!u::IsUpper(cps[0])) return TokenClass::kOther;

  bool apostrophe = false, hyphen = false, inner_upper_or_digit = false;
  bool word_chars_only = true;
  for (size_t i = 1; i < cps.size(); ++i) {
    char32_t c = cps[i];
    if (u::IsApostrophe(c)) {
      apostrophe = true;
    } else if (c == U'-') {
      hyphen = true;
    } else if (u::IsUpper(c) || u::IsDigit(c)) {
      inner_upper_or_digit = true;
    } else if (!u::IsLower(c)) {
      word_chars_only = false;
    }
  }
  if (!word_chars_only) return TokenClass::kOther;
  if (apostrophe) return TokenClass::kWordWithApostropheFirstCapital;
  if (hyphen) return TokenClass::kWordWithHyphenFirstCapital;
  if (inner_upper_or_digit) return TokenClass::kMixedWordFirstCapital;
  return TokenClass::kFirstCapitalWord;
}

namespace {

Token MakeToken(std::string surface, size_t begin) {
  Token t;
  t.token_class = Classify(surface);
  t.char_span = {begin, begin + surface.size()};
  t.surface = std::move(surface);
  return t;
}

// Code points of `text` with their byte offsets.
struct Cp {
  char32_t c;
  size_t begin;
  size_t end;
};

std::vector<Cp> Scan(std::string_view text) {
  std::vector<Cp> out;
  size_t i = 0;
  while (i < text.size()) {
    unsigned char b = text[i];
    size_t len = b < 0x80 ? 1 : (b & 0xE0) == 0xC0 ? 2 : (b & 0xF0) == 0xE0 ? 3
                                                   : (b & 0xF8) == 0xF0 ? 4 : 1;
    if (i + len > text.size()) len = 1;
    std::u32string cp = u::Decode(text.substr(i, len));
    out.push_back({cp.empty() ? char32_t{0xFFFD} : cp[0], i, i + len});
    i += len;
  }
  return out;
}

bool IsClosingQuote(char32_t c) {
  return c == U'"' || c == 0x201D || c == 0x2019 || c == U'\'' || c == U')' ||
         c == 0xBB;
}

bool IsOpeningQuote(char32_t c) {
  return c == U'"' || c == 0x201C || c == 0xAB || c == U'(' || c == U'\'';
}

}  // namespace

std::vector<Token> SplitApostrophe(std::string_view word, size_t offset) {
  std::vector<Cp> cps = Scan(word);
  for (size_t i = 0; i < cps.size(); ++i) {
    if (!u::IsApostrophe(cps[i].c)) continue;
    if (i == 0 || i + 1 == cps.size()) break;
    size_t a = cps[i].begin, b = cps[i].end;
    return {MakeToken(std::string(word.substr(0, a)), offset),
            MakeToken(std::string(word.substr(a, b - a)), offset + a),
            MakeToken(std::string(word.substr(b)), offset + b)};
  }
  return {MakeToken(std::string(word), offset)};
}

std::vector<CompoundToken> ApostropheCompounds(
    std::string_view source, const std::vector<Token> &tokens) {
  std::vector<CompoundToken> out;
  for (size_t i = 0; i + 2 < tokens.size(); ++i) {
    const Token &stem = tokens[i], &apo = tokens[i + 1], &suffix = tokens[i + 2];
    if (apo.token_class != TokenClass::kApostrophe) continue;
    if (stem.token_class == TokenClass::kPunctuation ||
        suffix.token_class == TokenClass::kPunctuation) {
      continue;
    }
    if (stem.char_span.end != apo.char_span.begin ||
        apo.char_span.end != suffix.char_span.begin) {
      continue;
    }
    size_t begin = stem.char_span.begin, end = suffix.char_span.end;
    if (end > source.size()) continue;
    CompoundToken compound;
    compound.first = i;
    compound.last = i + 3;
    compound.token = MakeToken(std::string(source.substr(begin, end - begin)),
                               begin);
    out.push_back(std::move(compound));
  }
  return out;
}

Tokenizer::Tokenizer()
    : Tokenizer({"dr", "prof", "doç", "yrd", "vb", "vs", "av", "sn", "st",
                 "mr", "mrs", "no", "bkz", "örn", "ltd", "şti", "org", "gen"}) {}

Tokenizer::Tokenizer(std::set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

void Tokenizer::AddAbbreviation(std::string_view abbreviation) {
  std::string a = u::Lower(abbreviation);
  while (!a.empty() && a.back() == '.') a.pop_back();
  if (!a.empty()) abbreviations_.insert(a);
}

std::vector<Token> Tokenizer::Tokenize(std::string_view text,
                                       size_t offset) const {
  std::vector<Token> tokens;
  std::vector<Cp> cps = Scan(text);
  size_t i = 0;
  while (i < cps.size()) {
    if (u::IsSpace(cps[i].c)) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < cps.size() && !u::IsSpace(cps[j].c)) ++j;
    // Word is cps[i, j). Peel punctuation off both ends.
    size_t lo = i, hi = j;
    std::vector<Token> trailing;
    while (lo < hi && u::IsPunctuation(cps[lo].c)) {
      const Cp &p = cps[lo];
      tokens.push_back(MakeToken(
          std::string(text.substr(p.begin, p.end - p.begin)), offset + p.begin));
      ++lo;
    }
    while (hi > lo && u::IsPunctuation(cps[hi - 1].c)) {
      const Cp &p = cps[hi - 1];
      trailing.push_back(MakeToken(
          std::string(text.substr(p.begin, p.end - p.begin)), offset + p.begin));
      --hi;
    }
    if (lo < hi) {
      size_t b = cps[lo].begin, e = cps[hi - 1].end;
      for (Token &t : SplitApostrophe(text.substr(b, e - b), offset + b)) {
        tokens.push_back(std::move(t));
      }
    }
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
      tokens.push_back(std::move(*it));
    }
    i = j;
  }
  return tokens;
}

std::vector<SentenceSpan> Tokenizer::SplitSentences(std::string_view line,
                                                    size_t line_index) const {
  std::vector<SentenceSpan> out;
  std::vector<Cp> cps = Scan(line);

  auto emit = [&](size_t begin_cp, size_t end_cp) {
    while (begin_cp < end_cp && u::IsSpace(cps[begin_cp].c)) ++begin_cp;
    while (end_cp > begin_cp && u::IsSpace(cps[end_cp - 1].c)) --end_cp;
    if (begin_cp >= end_cp) return;
    SentenceSpan s;
    s.char_span = {cps[begin_cp].begin, cps[end_cp - 1].end};
    s.text = std::string(
        line.substr(s.char_span.begin, s.char_span.end - s.char_span.begin));
    s.tokens = Tokenize(s.text, s.char_span.begin);
    s.source_line_index = line_index;
    if (!s.tokens.empty()) out.push_back(std::move(s));
  };

  size_t start = 0;
  for (size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i].c;
    if (c != U'.' && c != U'!' && c != U'?') continue;
    size_t j = i + 1;
    while (j < cps.size() &&
           (cps[j].c == U'.' || cps[j].c == U'!' || cps[j].c == U'?')) {
      ++j;
    }
    while (j < cps.size() && IsClosingQuote(cps[j].c)) ++j;
    if (j >= cps.size() || !u::IsSpace(cps[j].c)) continue;
    size_t k = j;
    while (k < cps.size() && u::IsSpace(cps[k].c)) ++k;
    size_t cap = k;
    while (cap < cps.size() && IsOpeningQuote(cps[cap].c)) ++cap;
    if (cap >= cps.size() || !u::IsUpper(cps[cap].c)) continue;

    if (c == U'.' && j == i + 1) {
      // Abbreviation or initial right before the period?
      size_t w = i;
      while (w > start && !u::IsSpace(cps[w - 1].c) &&
             !u::IsPunctuation(cps[w - 1].c)) {
        --w;
      }
      std::string word = std::string(
          line.substr(cps[w].begin, cps[i].begin - cps[w].begin));
      if (w < i && i - w == 1 && u::IsUpper(cps[w].c)) continue;
      if (!word.empty() && abbreviations_.count(u::Lower(word))) continue;
    }
    emit(start, j);
    start = k;
    i = k - 1;
  }
  emit(start, cps.size());
  return out;
}

}  // namespace tamx
