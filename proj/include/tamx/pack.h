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


#ifndef TAMX_PACK_H_
#define TAMX_PACK_H_

#include <filesystem>
#include <string>
#include <vector>

#include "tamx/ffs.h"
#include "tamx/grammar.h"
#include "tamx/lexicon.h"
#include "tamx/matcher.h"
#include "tamx/tam.h"
#include "tamx/tokenizer.h"

namespace tamx {

// A lexicon key tagged with the marker pattern its verb form carries.
struct VerbMarker {
  std::string key;
  std::string pattern;
  int line = 0;
};

struct GrammarPack {
  std::filesystem::path root;
  TypeRegistry registry;
  Cascade cascade;
  std::vector<std::string> level_files;
  std::vector<LexiconEntry> lexicon_entries;
  CompiledLexicon lexicon;
  MarkerTable markers;
  TransformTable transforms;
  std::vector<VerbMarker> verb_markers;
  Tokenizer tokenizer;
  std::vector<std::string> warnings;

  EngineContext context() const;
};

// Reads types.decl, manifest, the level files it lists, lexicon.lex and
// tam/{markers,transforms,verb_markers}.tab, then validates. Throws
// PackError listing every violation; warnings are kept on the pack.
GrammarPack LoadPack(const std::filesystem::path &dir);

// Violations of an already assembled pack; reachability warnings are
// appended to `warnings` when given.
std::vector<std::string> ValidatePack(const GrammarPack &pack,
                                      std::vector<std::string> *warnings);

struct CatalogEntry {
  std::string rule;
  std::string level;
  size_t level_index = 0;
  std::string output_type;
};

std::vector<CatalogEntry> RuleCatalog(const GrammarPack &pack);

// `key | pattern` lines.
std::vector<VerbMarker> ParseVerbMarkers(std::string_view text);

}  // namespace tamx

#endif  // TAMX_PACK_H_
