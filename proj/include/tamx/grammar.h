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

#ifndef TAMX_GRAMMAR_H_
#define TAMX_GRAMMAR_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tamx/ffs.h"

namespace tamx {

enum class SearchMode { kLongestMatch, kAllMatches, kAllLongestMatches };
enum class OutputMode { kGrammar, kAll };

std::string_view SearchModeName(SearchMode mode);
std::optional<SearchMode> ParseSearchMode(std::string_view name);
std::string_view OutputModeName(OutputMode mode);

struct GrammarSettings {
  std::vector<std::string> modules;
  SearchMode search_mode = SearchMode::kAllLongestMatches;
  OutputMode output_mode = OutputMode::kGrammar;
};

// Left-hand side of a rule: a regular expression over feature structures.
struct PatternElement {
  enum class Kind { kConstraint, kSequence, kAlternation, kOptional, kLabeled };

  Kind kind = Kind::kSequence;
  ConstraintSet constraint;               // kConstraint
  std::vector<PatternElement> children;   // kSequence, kAlternation; one for
                                          // kOptional and kLabeled
  std::string label;                      // kLabeled

  static PatternElement Constraint(ConstraintSet c);
  static PatternElement Sequence(std::vector<PatternElement> items);
  static PatternElement Alternation(std::vector<PatternElement> branches);
  static PatternElement Optional(PatternElement item);
  static PatternElement Labeled(PatternElement item, std::string label);

  // Variables captured anywhere below this element.
  void CollectVariables(std::set<std::string> &out) const;
  void CollectLabels(std::vector<std::string> &out) const;
  void CollectConstraints(std::vector<const ConstraintSet *> &out) const;
};

// Right-hand side value: literal, variable or functional call.
struct ValueExpr {
  enum class Kind { kLiteral, kVariable, kCall };
  Kind kind = Kind::kLiteral;
  std::string text;  // literal text, variable name or function name
  std::vector<ValueExpr> args;
};

struct TemplateAssignment {
  std::string feature;
  ValueExpr value;
};

// `#variable := Function(args)` on the right-hand side.
struct AuxDefinition {
  std::string variable;
  ValueExpr call;
};

struct GrammarRule {
  std::string name;
  PatternElement lhs;
  std::string output_label;  // empty: the whole left-hand side
  std::string output_type;
  std::vector<TemplateAssignment> assignments;
  std::vector<AuxDefinition> aux;
  int line = 0;
};

struct GrammarLevel {
  std::string name;
  GrammarSettings settings;
  std::vector<GrammarRule> rules;
};

struct Cascade {
  std::vector<GrammarLevel> levels;
};

// Parses an optional SETTINGS block followed by rules between PATTERNS and
// END_PATTERNS. Type names and features are checked against `registry`, and
// every right-hand-side variable must be bound on the left or by an earlier
// auxiliary definition. Throws ParseError (syntax) or GrammarError.
GrammarLevel ParseGrammar(std::string_view text, const TypeRegistry &registry,
                          std::string name = "");

}  // namespace tamx

#endif  // TAMX_GRAMMAR_H_
