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

#ifndef TAMX_FFS_H_
#define TAMX_FFS_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tamx {

// Half-open range of token positions [start, end).
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool Contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span &other) const {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const Span &, const Span &) = default;
  friend auto operator<=>(const Span &, const Span &) = default;
};

struct TypeDeclaration {
  std::string name;
  std::vector<std::string> features;

  bool Declares(std::string_view feature) const;
  // Index of a feature in declaration order, or -1.
  int IndexOf(std::string_view feature) const;
};

// The set of types flat feature structures may take. Immutable once built;
// copies share nothing, so sharing a const registry across threads is safe.
class TypeRegistry {
 public:
  // Throws SchemaError on a duplicate type or a duplicate feature.
  void Declare(TypeDeclaration decl);

  const TypeDeclaration *Find(std::string_view name) const;
  const TypeDeclaration &Get(std::string_view name) const;
  bool Has(std::string_view name) const { return Find(name) != nullptr; }

  const std::vector<TypeDeclaration> &types() const { return types_; }

  // Parses `name := [F1, F2, ...]` declarations. A declaration may span
  // several lines; `//` and `%` start comments.
  static TypeRegistry Parse(std::string_view text);

 private:
  std::vector<TypeDeclaration> types_;
  std::unordered_map<std::string, size_t> index_;
};

// Feature name -> atomic value. A feature missing from the map is absent,
// which is distinct from any value.
using Assignments = std::map<std::string, std::string>;

// A typed, non-recursive bundle of feature/value pairs anchored to a span of
// the token stream.
class FlatFeatureStructure {
 public:
  FlatFeatureStructure() = default;

  const std::string &type() const { return type_; }
  const Assignments &features() const { return features_; }
  const Span &span() const { return span_; }

  // Returns nullptr for an absent feature.
  const std::string *Get(std::string_view feature) const;
  std::optional<std::string> Value(std::string_view feature) const;
  bool Has(std::string_view feature) const { return Get(feature) != nullptr; }

  // Widening the span is the only mutation allowed after construction.
  void set_span(Span span) { span_ = span; }

  friend bool operator==(const FlatFeatureStructure &,
                         const FlatFeatureStructure &) = default;
  friend auto operator<=>(const FlatFeatureStructure &,
                          const FlatFeatureStructure &) = default;

 private:
  friend FlatFeatureStructure MakeFfs(const TypeRegistry &, std::string_view,
                                      Assignments, Span);
  std::string type_;
  Assignments features_;
  Span span_;
};

// Validates and builds a structure. Empty values count as absent and are
// dropped. Throws SchemaError for unknown types and undeclared features.
FlatFeatureStructure MakeFfs(const TypeRegistry &registry,
                             std::string_view type_name,
                             Assignments assignments, Span span);

// One feature constraint: either a literal the value must equal, or a
// capture variable the value gets bound to.
struct FeatureConstraint {
  enum class Kind { kLiteral, kVariable };
  std::string feature;
  Kind kind = Kind::kLiteral;
  std::string text;  // literal value or variable name (without '#')

  friend bool operator==(const FeatureConstraint &,
                         const FeatureConstraint &) = default;
};

struct ConstraintSet {
  std::string type_name;
  std::vector<FeatureConstraint> constraints;

  // Throws SchemaError unless every feature is declared for type_name.
  void Validate(const TypeRegistry &registry) const;
};

using Bindings = std::map<std::string, std::string>;

// Returns the captured bindings on success, nullopt on no-match. A variable
// already present in `bound` must agree with the structure's value.
std::optional<Bindings> Matches(const FlatFeatureStructure &ffs,
                                const ConstraintSet &constraints,
                                const Bindings &bound = {});

}  // namespace tamx

#endif  // TAMX_FFS_H_
