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

#include "tamx/ffs.h"

#include <algorithm>
#include <cctype>

#include "tamx/error.h"

namespace tamx {

bool TypeDeclaration::Declares(std::string_view feature) const {
  return IndexOf(feature) >= 0;
}

int TypeDeclaration::IndexOf(std::string_view feature) const {
  for (size_t i = 0; i < features.size(); ++i) {
    if (features[i] == feature) return static_cast<int>(i);
  }
  return -1;
}

void TypeRegistry::Declare(TypeDeclaration decl) {
  if (decl.name.empty()) throw SchemaError("type name is empty");
  if (index_.count(decl.name)) {
    throw SchemaError("type '" + decl.name + "' declared twice");
  }
  for (size_t i = 0; i < decl.features.size(); ++i) {
    if (decl.features[i].empty()) {
      throw SchemaError("type '" + decl.name + "' has an empty feature name");
    }
    for (size_t j = 0; j < i; ++j) {
      if (decl.features[i] == decl.features[j]) {
        throw SchemaError("feature '" + decl.features[i] +
                          "' declared twice in type '" + decl.name + "'");
      }
    }
  }
  index_.emplace(decl.name, types_.size());
  types_.push_back(std::move(decl));
}

const TypeDeclaration *TypeRegistry::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &types_[it->second];
}

const TypeDeclaration &TypeRegistry::Get(std::string_view name) const {
  const TypeDeclaration *decl = Find(name);
  if (decl == nullptr) {
    throw SchemaError("unknown type '" + std::string(name) + "'");
  }
  return *decl;
}

namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string StripComment(std::string_view line) {
  size_t cut = line.size();
  size_t slashes = line.find("//");
  if (slashes != std::string_view::npos) cut = slashes;
  size_t pct = line.find('%');
  if (pct != std::string_view::npos) cut = std::min(cut, pct);
  return std::string(line.substr(0, cut));
}

}  // namespace

TypeRegistry TypeRegistry::Parse(std::string_view text) {
  TypeRegistry registry;
  std::string pending;
  int pending_line = 0;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = StripComment(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (Trim(line).empty() && pending.empty()) continue;
    if (pending.empty()) pending_line = line_no;
    pending += line;
    pending += ' ';
    if (pending.find(']') == std::string::npos) continue;

    std::string decl_text = std::move(pending);
    pending.clear();
    size_t assign = decl_text.find(":=");
    size_t open = decl_text.find('[');
    size_t close = decl_text.find(']');
    if (assign == std::string::npos || open == std::string::npos ||
        open < assign || close < open) {
      throw ParseError("expected 'name := [F1, F2, ...]'", pending_line);
    }
    if (!Trim(decl_text.substr(close + 1)).empty()) {
      throw ParseError("trailing text after ']'", pending_line);
    }
    TypeDeclaration decl;
    decl.name = Trim(decl_text.substr(0, assign));
    if (!Trim(decl_text.substr(assign + 2, open - assign - 2)).empty()) {
      throw ParseError("unexpected text between ':=' and '['", pending_line);
    }
    std::string body = decl_text.substr(open + 1, close - open - 1);
    size_t start = 0;
    while (start <= body.size()) {
      size_t comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      std::string feature = Trim(body.substr(start, comma - start));
      if (!feature.empty()) decl.features.push_back(feature);
      start = comma + 1;
    }
    try {
      registry.Declare(std::move(decl));
    } catch (const SchemaError &e) {
      throw ParseError(e.what(), pending_line);
    }
  }
  if (!Trim(pending).empty()) {
    throw ParseError("unterminated type declaration", pending_line);
  }
  return registry;
}

const std::string *FlatFeatureStructure::Get(std::string_view feature) const {
  auto it = features_.find(std::string(feature));
  return it == features_.end() ? nullptr : &it->second;
}

std::optional<std::string> FlatFeatureStructure::Value(
    std::string_view feature) const {
  const std::string *v = Get(feature);
  if (v == nullptr) return std::nullopt;
  return *v;
}

FlatFeatureStructure MakeFfs(const TypeRegistry &registry,
                             std::string_view type_name,
                             Assignments assignments, Span span) {
  const TypeDeclaration &decl = registry.Get(type_name);
  for (auto it = assignments.begin(); it != assignments.end();) {
    if (!decl.Declares(it->first)) {
      throw SchemaError("feature '" + it->first + "' is not declared for type '" +
                        decl.name + "'");
    }
    if (it->second.empty()) {
      it = assignments.erase(it);
    } else {
      ++it;
    }
  }
  FlatFeatureStructure ffs;
  ffs.type_ = decl.name;
  ffs.features_ = std::move(assignments);
  ffs.span_ = span;
  return ffs;
}

void ConstraintSet::Validate(const TypeRegistry &registry) const {
  const TypeDeclaration &decl = registry.Get(type_name);
  for (const auto &c : constraints) {
    if (!decl.Declares(c.feature)) {
      throw SchemaError("feature '" + c.feature + "' is not declared for type '" +
                        type_name + "'");
    }
  }
}

std::optional<Bindings> Matches(const FlatFeatureStructure &ffs,
                                const ConstraintSet &constraints,
                                const Bindings &bound) {
  if (ffs.type() != constraints.type_name) return std::nullopt;
  Bindings captured;
  for (const auto &c : constraints.constraints) {
    const std::string *value = ffs.Get(c.feature);
    if (value == nullptr) return std::nullopt;
    if (c.kind == FeatureConstraint::Kind::kLiteral) {
      if (*value != c.text) return std::nullopt;
      continue;
    }
    auto prior = bound.find(c.text);
    if (prior != bound.end() && prior->second != *value) return std::nullopt;
    auto [it, inserted] = captured.emplace(c.text, *value);
    if (!inserted && it->second != *value) return std::nullopt;
  }
  return captured;
}

}  // namespace tamx
