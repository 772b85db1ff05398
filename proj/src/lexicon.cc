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

#include "tamx/lexicon.h"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "tamx/error.h"
#include "tamx/unicode.h"

namespace tamx {

namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool IsFeatureName(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!(std::isupper(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<LexiconEntry> ParseLexicon(std::string_view text,
                                       const TypeRegistry &registry,
                                       const Tokenizer &tokenizer) {
  const TypeDeclaration *gazetteer = registry.Find(kGazetteerType);
  if (gazetteer == nullptr) {
    throw SchemaError("type registry does not declare 'gazetteer'");
  }
  std::vector<LexiconEntry> entries;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;

    size_t bar = line.find('|');
    if (bar == std::string::npos) {
      throw ParseError("lexicon entry has no '|' separator", line_no);
    }
    LexiconEntry entry;
    entry.line = line_no;
    std::string key = Trim(line.substr(0, bar));
    for (const Token &t : tokenizer.Tokenize(key)) entry.key.push_back(t.surface);
    if (entry.key.empty()) throw ParseError("empty lexicon key", line_no);

    size_t start = bar + 1;
    while (start <= line.size()) {
      size_t next = line.find('|', start);
      if (next == std::string::npos) next = line.size();
      std::string field = Trim(line.substr(start, next - start));
      start = next + 1;
      if (field.empty()) continue;
      size_t colon = field.find(':');
      if (colon == std::string::npos) {
        throw ParseError("assignment '" + field + "' has no ':'", line_no);
      }
      std::string feature = Trim(field.substr(0, colon));
      std::string value = Trim(field.substr(colon + 1));
      if (!IsFeatureName(feature)) {
        throw ParseError("bad feature name '" + feature + "'", line_no);
      }
      if (!gazetteer->Declares(feature)) {
        throw ParseError("feature '" + feature +
                             "' is not declared for type 'gazetteer'",
                         line_no);
      }
      if (value.empty()) {
        throw ParseError("feature '" + feature + "' has an empty value",
                         line_no);
      }
      if (!entry.assignments.emplace(feature, value).second) {
        throw ParseError("feature '" + feature + "' assigned twice", line_no);
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

CompiledLexicon::CompiledLexicon() : nodes_(1) {}

int CompiledLexicon::Child(int node, std::string_view word) const {
  const auto &children = nodes_[node].children;
  auto it = std::lower_bound(
      children.begin(), children.end(), word,
      [](const auto &child, std::string_view w) { return child.first < w; });
  if (it == children.end() || it->first != word) return -1;
  return it->second;
}

CompiledLexicon CompiledLexicon::Compile(std::vector<LexiconEntry> entries) {
  CompiledLexicon lexicon;
  for (const LexiconEntry &entry : entries) {
    int node = 0;
    for (const std::string &word : entry.key) {
      int next = lexicon.Child(node, word);
      if (next < 0) {
        next = static_cast<int>(lexicon.nodes_.size());
        lexicon.nodes_.emplace_back();
        auto &children = lexicon.nodes_[node].children;
        auto it = std::lower_bound(
            children.begin(), children.end(), word,
            [](const auto &child, const std::string &w) { return child.first < w; });
        children.insert(it, {word, next});
      }
      node = next;
    }
    lexicon.nodes_[node].entries.push_back(entry.assignments);
  }
  lexicon.entries_ = std::move(entries);
  return lexicon;
}

const std::vector<Assignments> &CompiledLexicon::Lookup(
    const std::vector<std::string> &key) const {
  static const std::vector<Assignments> kEmpty;
  int node = 0;
  for (const std::string &word : key) {
    node = Child(node, word);
    if (node < 0) return kEmpty;
  }
  return key.empty() ? kEmpty : nodes_[node].entries;
}

CompiledLexicon::Match CompiledLexicon::LongestMatch(
    const std::vector<Token> &tokens, size_t pos, bool fold_first) const {
  Match best;
  if (pos >= tokens.size()) return best;
  std::vector<int> starts;
  int exact = Child(0, tokens[pos].surface);
  if (exact >= 0) starts.push_back(exact);
  if (fold_first && unicode::StartsUpper(tokens[pos].surface)) {
    int folded = Child(0, unicode::LowerFirst(tokens[pos].surface));
    if (folded >= 0 && folded != exact) starts.push_back(folded);
  }
  // Exact-case paths come first, so on equal length they win.
  for (int node : starts) {
    size_t length = 1;
    int current = node;
    while (true) {
      const Node &n = nodes_[current];
      if (!n.entries.empty() && length > best.length) {
        best.length = length;
        best.entries = &n.entries;
      }
      if (pos + length >= tokens.size()) break;
      current = Child(current, tokens[pos + length].surface);
      if (current < 0) break;
      ++length;
    }
  }
  return best;
}

std::string CompiledLexicon::Serialize() const {
  nlohmann::ordered_json doc;
  doc["format"] = "tamx-lexicon";
  doc["version"] = kFormatVersion;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const LexiconEntry &entry : entries_) {
    nlohmann::ordered_json e;
    e["key"] = entry.key;
    e["features"] = entry.assignments;
    e["line"] = entry.line;
    list.push_back(std::move(e));
  }
  doc["entries"] = std::move(list);
  return doc.dump(1);
}

CompiledLexicon CompiledLexicon::Deserialize(std::string_view data) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(data);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("compiled lexicon is not valid JSON: ") +
                         e.what(),
                     0);
  }
  if (!doc.is_object() || doc.value("format", "") != "tamx-lexicon") {
    throw ParseError("not a compiled tamx lexicon", 0);
  }
  if (doc.value("version", 0) != kFormatVersion) {
    throw ParseError("unsupported compiled lexicon version " +
                         std::to_string(doc.value("version", 0)),
                     0);
  }
  std::vector<LexiconEntry> entries;
  try {
    for (const auto &e : doc.at("entries")) {
      LexiconEntry entry;
      entry.key = e.at("key").get<std::vector<std::string>>();
      entry.assignments = e.at("features").get<Assignments>();
      entry.line = e.value("line", 0);
      entries.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed compiled lexicon: ") + e.what(), 0);
  }
  return Compile(std::move(entries));
}

bool IsClauseInitial(const std::vector<Token> &tokens, size_t pos) {
  if (pos == 0) return true;
  const std::string &prev = tokens[pos - 1].surface;
  return prev == ":" || prev == ";" || prev == "\"" || prev == "“" ||
         prev == "«" || prev == "(";
}

std::vector<FlatFeatureStructure> Annotate(const std::vector<Token> &tokens,
                                           const CompiledLexicon &lexicon,
                                           const TypeRegistry &registry) {
  std::vector<FlatFeatureStructure> out;
  for (size_t pos = 0; pos < tokens.size(); ++pos) {
    CompiledLexicon::Match m =
        lexicon.LongestMatch(tokens, pos, IsClauseInitial(tokens, pos));
    if (m.entries == nullptr) continue;
    for (const Assignments &a : *m.entries) {
      out.push_back(MakeFfs(registry, kGazetteerType, a,
                            Span{pos, pos + m.length}));
    }
  }
  return out;
}

}  // namespace tamx
