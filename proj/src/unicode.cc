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

#include "tamx/unicode.h"

#include "tamx/error.h"

namespace tamx {

ParseError::ParseError(const std::string &message, int line, int column)
    : Error(line > 0 ? "line " + std::to_string(line) +
                           (column > 0 ? ":" + std::to_string(column) : "") +
                           ": " + message
                     : message),
      line_(line),
      column_(column) {}

namespace {

std::string JoinViolations(const std::vector<std::string> &violations) {
  std::string out = "pack validation failed";
  for (const auto &v : violations) out += "\n  " + v;
  return out;
}

}  // namespace

PackError::PackError(std::vector<std::string> violations)
    : Error(JoinViolations(violations)), violations_(std::move(violations)) {}

namespace unicode {

std::u32string Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    unsigned char b = text[i];
    int len = 0;
    char32_t c = 0;
    if (b < 0x80) {
      len = 1;
      c = b;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      c = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      c = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      c = b & 0x07;
    }
    bool ok = len > 0 && i + len <= text.size();
    for (int k = 1; ok && k < len; ++k) {
      unsigned char cb = text[i + k];
      if ((cb & 0xC0) != 0x80) ok = false;
      c = (c << 6) | (cb & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(c);
    i += len;
  }
  return out;
}

std::string Encode(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) out += Encode(c);
  return out;
}

// Covers ASCII, Latin-1 Supplement and Latin Extended-A, which is all the
// Turkish alphabet needs plus the odd foreign name in news text.
bool IsUpper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  if (c >= 0xC0 && c <= 0xDE) return c != 0xD7;
  if (c == 0x130) return true;  // İ
  if (c == 0x131 || c == 0x138 || c == 0x149 || c == 0x17F) return false;
  if (c == 0x178) return true;
  if (c >= 0x100 && c <= 0x137) return c % 2 == 0;
  if (c >= 0x139 && c <= 0x148) return c % 2 == 1;
  if (c >= 0x14A && c <= 0x177) return c % 2 == 0;
  if (c >= 0x179 && c <= 0x17E) return c % 2 == 1;
  return false;
}

bool IsLower(char32_t c) {
  if (c >= U'a' && c <= U'z') return true;
  if (c >= 0xDF && c <= 0xFF) return c != 0xF7;
  if (c == 0x131 || c == 0x138 || c == 0x149 || c == 0x17F) return true;
  if (c >= 0x100 && c <= 0x17F) return !IsUpper(c) && c != 0x130;
  return false;
}

bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == 0xA0 ||
         c == 0x2009 || c == 0x200B || c == 0x3000 || c == 0xFEFF;
}

bool IsApostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

bool IsPunctuation(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case 0xAB: case 0xBB: case 0x2018: case 0x2019: case 0x201C:
    case 0x201D: case 0x2013: case 0x2014: case 0x2026: case 0xB4:
      return true;
    default:
      return false;
  }
}

char32_t ToLower(char32_t c) {
  if (c == U'I') return 0x131;
  if (c == 0x130) return U'i';
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (!IsUpper(c)) return c;
  if (c >= 0xC0 && c <= 0xDE) return c + 32;
  if (c == 0x178) return 0xFF;
  return c + 1;
}

char32_t ToUpper(char32_t c) {
  if (c == U'i') return 0x130;
  if (c == 0x131) return U'I';
  if (c >= U'a' && c <= U'z') return c - 32;
  if (!IsLower(c)) return c;
  if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 32;
  if (c == 0xFF) return 0x178;
  if (c >= 0x100 && c <= 0x17F) {
    char32_t up = c - 1;
    return IsUpper(up) ? up : c;
  }
  return c;
}

std::string Lower(std::string_view text) {
  std::u32string cps = Decode(text);
  for (char32_t &c : cps) c = ToLower(c);
  return Encode(cps);
}

std::string LowerFirst(std::string_view text) {
  std::u32string cps = Decode(text);
  if (!cps.empty()) cps[0] = ToLower(cps[0]);
  return Encode(cps);
}

bool StartsUpper(std::string_view text) {
  std::u32string cps = Decode(text.substr(0, 4));
  return !cps.empty() && IsUpper(cps[0]);
}

}  // namespace unicode
}  // namespace tamx
