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

#ifndef TAMX_UNICODE_H_
#define TAMX_UNICODE_H_

#include <string>
#include <string_view>


namespace tamx::unicode {

// Decodes UTF-8. Malformed bytes decode to U+FFFD, one per byte.
std::u32string Decode(std::string_view text);
std::string Encode(std::u32string_view text);
std::string Encode(char32_t c);

bool IsUpper(char32_t c);
bool IsLower(char32_t c);
inline bool IsLetter(char32_t c) { return IsUpper(c) || IsLower(c); }
inline bool IsDigit(char32_t c) { return c >= U'0' && c <= U'9'; }
bool IsSpace(char32_t c);
bool IsPunctuation(char32_t c);
bool IsApostrophe(char32_t c);

// Turkish-aware case mapping: I <-> ı, İ <-> i.
char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);

std::string Lower(std::string_view text);

// Lowercases only the first code point.
std::string LowerFirst(std::string_view text);

// True if the first code point is an uppercase letter.
bool StartsUpper(std::string_view text);

}  // namespace tamx::unicode

#endif  // TAMX_UNICODE_H_
