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


#ifndef TAMX_RENDER_H_
#define TAMX_RENDER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tamx/corpus.h"
#include "tamx/ffs.h"

namespace tamx {

// Header line with the type name, then `FEATURE : value` lines in
// declaration order. VOLITIONAL, EPISTEMIC and TEMPORAL are always printed,
// followed by an empty specification slot "()"; other features only when
// present.
std::string RenderBlock(const FlatFeatureStructure &ffs,
                        const TypeRegistry &registry);

// Blocks separated by blank lines, each preceded by "# <sentence>".
std::string RenderBlocks(const std::vector<SentenceAnalysis> &analyses,
                         const TypeRegistry &registry);

// The JSON view of one analysis.
struct AnalysisRecord {
  std::string doc;
  size_t line = 0;
  size_t sentence = 0;
  size_t begin = 0;
  size_t end = 0;
  std::string rule;
  std::string surface;
  TamClass tam;
  std::string verb;
  std::vector<std::string> people;
  std::string disaster;
  std::vector<std::string> needs;

  friend bool operator==(const AnalysisRecord &,
                         const AnalysisRecord &) = default;
};

AnalysisRecord ToRecord(const SentenceAnalysis &analysis);

// A JSON array, one object per record, keys in a fixed order.
std::string RenderJson(const std::vector<AnalysisRecord> &records);
std::string RenderJson(const std::vector<SentenceAnalysis> &analyses);
// Throws ParseError on malformed input.
std::vector<AnalysisRecord> ParseJson(std::string_view text);

// Splits a dash-joined slot such as "--içme suyu-iş makinası", dropping
// empty items.
std::vector<std::string> SplitSlot(std::string_view value);

struct FilterExpr {
  std::string dimension;  // volitional, epistemic, temporal, rule, disaster_type
  std::string value;
};

// "dimension=value"; throws ParseError or TamError.
FilterExpr ParseFilter(std::string_view text);

// A temporal query without anaphoric or specification parts compares only
// the base.
bool FilterMatches(const SentenceAnalysis &analysis, const FilterExpr &expr);

// Keeps analyses matching every expression.
std::vector<SentenceAnalysis> FilterAnalyses(
    const std::vector<SentenceAnalysis> &analyses,
    const std::vector<FilterExpr> &filters);

}  // namespace tamx

#endif  // TAMX_RENDER_H_
