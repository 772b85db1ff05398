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


#ifndef TAMX_STRINGS_H_
#define TAMX_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace tamx {

// ASCII whitespace only.
std::string Trim(std::string_view s);
std::vector<std::string> Split(std::string_view s, char sep);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);
// Splits on '\n' and drops a trailing '\r' from each line.
std::vector<std::string> Lines(std::string_view text);

}  // namespace tamx

#endif  // TAMX_STRINGS_H_
