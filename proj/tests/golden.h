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


#ifndef TAMX_TESTS_GOLDEN_H_
#define TAMX_TESTS_GOLDEN_H_

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tamx::golden {

struct Block {
  const char *label;
  const char *text;
};

// The twelve reference analyses, as printed (spacing and empty-marker
// variants kept).
inline const std::vector<Block> &Blocks() {
  static const std::vector<Block> blocks = {
      {"1a", R"(sentence_analysis
TYPE : Sentence
SURFACE : --içme suyu-iş makinası ihtiyaç var
VOLITIONAL : asserted ()
EPISTEMIC : certain (\ \)
TEMPORAL : perfect ()
VERB : ihtiyaç var
HUMANITARIAN_NEED : --içme suyu-iş makinası
RULE : request_sentence)"},
      {"1b", R"(sentence_analysis
TYPE : Sentence
SURFACE : --içme suyu-iş makinası ihtiyaç var
VOLITIONAL : asserted ()
EPISTEMIC : certain (\\)
TEMPORAL : simultaneous ()
VERB : ihtiyaç var
HUMANITARIAN_NEED : --içme suyu-iş makinası
RULE : request_sentence)"},
      {"2a", R"(sentence_analysis
TYPE : Sentence
SURFACE : çöktüğü tespit edildi
VOLITIONAL : asserted ()
EPISTEMIC : inferred (\ \)
TEMPORAL : anterior_ana_occ ()
VERB : çöktüğü tespit edildi
RULE : subordination_sentence)"},
      {"2b", R"(sentence_analysis
TYPE : Sentence
SURFACE : çöktüğü tespit edildi
VOLITIONAL : asserted ()
EPISTEMIC : inferred (\ \)
TEMPORAL : perfect ()
VERB : çöktüğü tespit edildi
RULE : subordination_sentence)"},
      {"3a", R"(sentence_analysis
TYPE : Sentence
SURFACE : göçükler meydana geldi
VOLITIONAL : asserted ()
EPISTEMIC : certain (\\)
TEMPORAL : anterior ()
VERB : meydana geldi
DISASTER : göçükler
RULE : incidence_sentence)"},
      {"3b", R"(sentence_analysis
TYPE : Sentence
SURFACE : göçükler meydana geldi
VOLITIONAL : asserted ()
EPISTEMIC : certain (\\)
TEMPORAL : anterior_ana_occ ()
VERB : meydana geldi
DISASTER : göçükler
RULE : incidence_sentence)"},
      {"3c", R"(sentence_analysis
TYPE : Sentence
SURFACE : göçükler meydana geldi
VOLITIONAL : asserted ()
EPISTEMIC : certain (\\)
TEMPORAL : perfect ()
VERB : meydana geldi
DISASTER : göçükler
RULE : incidence_sentence)"},
      {"4a", R"(sentence_analysis
TYPE : Sentence
SURFACE : olması bekleniyor
VOLITIONAL : asserted ()
EPISTEMIC : conjectured (\\)
TEMPORAL : posterior ()
VERB : olması bekleniyor
RULE : subordination_sentence)"},
      {"4b", R"(sentence_analysis
TYPE : Sentence
SURFACE : olması bekleniyor
VOLITIONAL : asserted ()
EPISTEMIC : conjectured (\\)
TEMPORAL : prospective ()
VERB : olması bekleniyor
RULE : subordination_sentence)"},
      {"5a", R"(sentence_analysis
TYPE : Sentence
SURFACE : Dinçer edildiğini söyledi
VOLITIONAL : hearsay ()
EPISTEMIC : (\\)
TEMPORAL : anterior_ana_occ ()
PEOPLE : Dinçer
VERB : edildiğini söyledi
RULE : subordination_sentence)"},
      {"5b", R"(sentence_analysis
TYPE : Sentence
SURFACE : Dinçer edildiğini söyledi
VOLITIONAL : hearsay ()
EPISTEMIC : (\\)
TEMPORAL : perfect ()
PEOPLE : Dinçer
VERB : edildiğini söyledi
RULE : subordination_sentence)"},
      {"5c", R"(sentence_analysis
TYPE : Sentence
SURFACE : Dinçer edildiğini söyledi
VOLITIONAL : hearsay ()
EPISTEMIC : (\\)
TEMPORAL : simultaneous ()
PEOPLE : Dinçer
VERB : edildiğini söyledi
RULE : subordination_sentence)"},
  };
  return blocks;
}

inline std::string Trim(std::string s) {
  auto ws = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

// Drops a trailing empty-specification marker: (), ( ), (\\) or (\ \).
inline std::string StripMarker(std::string v) {
  v = Trim(v);
  if (v.empty() || v.back() != ')') return v;
  auto open = v.rfind('(');
  if (open == std::string::npos) return v;
  std::string inner = v.substr(open + 1, v.size() - open - 2);
  inner.erase(std::remove_if(inner.begin(), inner.end(),
                             [](char c) { return c == ' ' || c == '\\'; }),
              inner.end());
  if (!inner.empty()) return v;
  return Trim(v.substr(0, open));
}

inline std::multiset<std::string> DashItems(const std::string &v) {
  std::multiset<std::string> out;
  std::string cur;
  for (char c : v + "-") {
    if (c == '-') {
      if (!Trim(cur).empty()) out.insert(Trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

// Feature map of one block, header line excluded.
using Normal = std::map<std::string, std::string>;

inline Normal Normalize(const std::string &block) {
  Normal out;
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = Trim(line.substr(0, colon));
    std::string value = StripMarker(line.substr(colon + 1));
    if (key == "HUMANITARIAN_NEED") {
      std::string joined;
      for (const auto &item : DashItems(value)) joined += item + "|";
      value = joined;
    }
    out[key] = value;
  }
  return out;
}

// Splits rendered output into blocks; '#' comment lines and blank lines
// separate nothing but are ignored.
inline std::vector<std::string> SplitBlocks(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  std::string cur;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    if (Trim(line) == "sentence_analysis") {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    }
    if (!Trim(line).empty()) cur += line + "\n";
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Labels of the reference blocks absent from `text`.
inline std::vector<std::string> Missing(const std::string &text) {
  std::vector<Normal> have;
  for (const auto &b : SplitBlocks(text)) have.push_back(Normalize(b));
  std::vector<std::string> missing;
  for (const auto &g : Blocks()) {
    Normal want = Normalize(g.text);
    if (std::find(have.begin(), have.end(), want) == have.end()) {
      missing.push_back(g.label);
    }
  }
  return missing;
}

}  // namespace tamx::golden

#endif  // TAMX_TESTS_GOLDEN_H_
