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

#ifndef TAMX_LEXICON_H_
#define TAMX_LEXICON_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tamx/ffs.h"
#include "tamx/tokenizer.h"

namespace tamx {

inline constexpr std::string_view kGazetteerType = "gazetteer";

struct LexiconEntry {
  std::vector<std::string> key;  // token surfaces, as the tokenizer splits them
  Assignments assignments;
  int line = 0;  // 1-based source line, 0 if synthetic
};

// Parses `key | FEAT:value | FEAT:value ...` lines. Blank lines and lines
// starting with '#' are skipped. Keys are tokenized with `tokenizer` so that
// "prof. dr." and "Van'da" line up with the token stream. Throws ParseError
// (with the line number) on malformed lines and undeclared features.
std::vector<LexiconEntry> ParseLexicon(std::string_view text,
                                       const TypeRegistry &registry,
                                       const Tokenizer &tokenizer = Tokenizer());

// Immutable word-level trie. Each node holds the assignments of every entry
// whose key ends there, in file order.
class CompiledLexicon {
 public:
  static constexpr int kFormatVersion = 1;

  CompiledLexicon();
  static CompiledLexicon Compile(std::vector<LexiconEntry> entries);

  // Entries whose key is exactly `key`; empty if none.
  const std::vector<Assignments> &Lookup(
      const std::vector<std::string> &key) const;

  struct Match {
    size_t length = 0;
    const std::vector<Assignments> *entries = nullptr;
  };
  // Longest key matching tokens starting at `pos`. When `fold_first` is set,
  // the first token may also match through its lowercased form.
  Match LongestMatch(const std::vector<Token> &tokens, size_t pos,
                     bool fold_first) const;

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  // Versioned JSON; Deserialize rejects other versions.
  std::string Serialize() const;
  static CompiledLexicon Deserialize(std::string_view data);

 private:
  struct Node {
    std::vector<std::pair<std::string, int>> children;  // sorted by word
    std::vector<Assignments> entries;
  };
  int Child(int node, std::string_view word) const;

  std::vector<Node> nodes_;
  std::vector<LexiconEntry> entries_;
};

// True if a lowercase lexicon key may match the token at `pos`: the token
// starts a sentence or follows a colon, semicolon or opening quote.
bool IsClauseInitial(const std::vector<Token> &tokens, size_t pos);

// Gazetteer structures for every position's longest match, all entries of
// that key, sorted by (start, -length). The scan moves one token at a time,
// so later-starting matches nested in a longer one are still reported.
std::vector<FlatFeatureStructure> Annotate(const std::vector<Token> &tokens,
                                           const CompiledLexicon &lexicon,
                                           const TypeRegistry &registry);

}  // namespace tamx

#endif  // TAMX_LEXICON_H_
