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


#ifndef TAMX_MATCHER_H_
#define TAMX_MATCHER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamx/ffs.h"
#include "tamx/functional.h"
#include "tamx/grammar.h"
#include "tamx/lexicon.h"
#include "tamx/tam.h"
#include "tamx/tokenizer.h"

namespace tamx {

inline constexpr std::string_view kTokenType = "token";
inline constexpr std::string_view kBasicTokenType = "basic-token";

// A level's input: items over token positions [0, token_count). Items that
// share a start are alternatives of each other.
class Stream {
 public:
  Stream() = default;
  // Items are stably sorted by start; exact duplicates are dropped.
  Stream(size_t token_count, std::vector<FlatFeatureStructure> items);

  size_t token_count() const { return token_count_; }
  const std::vector<FlatFeatureStructure> &items() const { return items_; }

  // First position >= pos where an item starts; token_count() if none.
  size_t NextOccupied(size_t pos) const;
  // Indices into items() of the items starting at pos.
  std::pair<size_t, size_t> ItemsAt(size_t pos) const;

 private:
  size_t token_count_ = 0;
  std::vector<FlatFeatureStructure> items_;
  std::vector<size_t> first_;  // token_count_ + 1 offsets into items_
};

// `token` for every token, `basic-token` for punctuation and apostrophes,
// a `token` over each apostrophe compound, then `annotations`.
Stream BuildStream(const std::vector<Token> &tokens,
                   const std::vector<CompoundToken> &compounds,
                   std::vector<FlatFeatureStructure> annotations,
                   const TypeRegistry &registry);

struct Match {
  Span span;  // first consumed item start to end
  Bindings bindings;
  std::map<std::string, Span> labels;
  std::vector<size_t> items;  // consumed item indices, in order
};

// All distinct matches of `lhs` starting at `pos`. A constraint consumes
// one item at the next occupied position, so unoccupied gaps are skipped.
// Zero-length matches are dropped.
std::vector<Match> MatchAt(const PatternElement &lhs, const Stream &stream,
                           size_t pos);

struct EngineContext {
  const TypeRegistry *registry = nullptr;
  const FunctionRegistry *functions = &FunctionRegistry::Builtins();
  const TransformTable *transforms = nullptr;
};

// Instantiates the rule's output. The span is the output label's region,
// widened by collectors. Unbound variables leave their features absent.
FlatFeatureStructure ApplyRhs(const GrammarRule &rule, const Match &match,
                              const Stream &stream, const EngineContext &ctx);

// `mode` overrides the level's search mode.
Stream RunLevel(const GrammarLevel &level, const Stream &input,
                const EngineContext &ctx,
                std::optional<SearchMode> mode = std::nullopt);

Stream RunCascade(const Cascade &cascade, const Stream &input,
                  const EngineContext &ctx,
                  std::optional<SearchMode> mode = std::nullopt);

// Annotates with the lexicon, builds the stream and runs every level.
Stream RunCascade(const Cascade &cascade, std::string_view source,
                  const std::vector<Token> &tokens,
                  const CompiledLexicon &lexicon, const EngineContext &ctx,
                  std::optional<SearchMode> mode = std::nullopt);

}  // namespace tamx

#endif  // TAMX_MATCHER_H_
