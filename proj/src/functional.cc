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

#include "tamx/functional.h"

#include <algorithm>

#include "tamx/error.h"
#include "tamx/matcher.h"
#include "tamx/strings.h"
#include "tamx/tam.h"
#include "tamx/unicode.h"

namespace tamx {

void FunctionRegistry::Register(std::string name, int min_args, int max_args,
                                Function fn) {
  functions_[std::move(name)] = Entry{min_args, max_args, std::move(fn)};
}

bool FunctionRegistry::Has(std::string_view name) const {
  return functions_.find(name) != functions_.end();
}

void FunctionRegistry::CheckArity(std::string_view name, size_t count) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) {
    throw GrammarError("unknown function '" + std::string(name) + "'");
  }
  const Entry &e = it->second;
  int n = static_cast<int>(count);
  if (n < e.min_args || (e.max_args >= 0 && n > e.max_args)) {
    throw GrammarError("function '" + std::string(name) + "' called with " +
                       std::to_string(count) + " arguments");
  }
}

Value FunctionRegistry::Call(std::string_view name,
                             const std::vector<Value> &args,
                             CallContext &ctx) const {
  CheckArity(name, args.size());
  Value v = functions_.find(name)->second.fn(args, ctx);
  if (v && v->empty()) return std::nullopt;
  return v;
}

std::vector<std::string> FunctionRegistry::names() const {
  std::vector<std::string> out;
  for (const auto &[name, entry] : functions_) out.push_back(name);
  return out;
}

bool IsClauseBoundary(std::string_view surface) {
  static const std::vector<std::string_view> kBoundaries = {
      "\"", "“", "”", "«", "»", ":", ";", "(", ")"};
  return std::find(kBoundaries.begin(), kBoundaries.end(), surface) !=
         kBoundaries.end();
}

namespace {

std::vector<std::string> Present(const std::vector<Value> &args) {
  std::vector<std::string> out;
  for (const auto &a : args) {
    if (a && !a->empty()) out.push_back(*a);
  }
  return out;
}

// type:FEATURE or type:FEATURE/FILTER=value
struct Selector {
  std::string type;
  std::string feature;
  std::string filter_feature;
  std::string filter_value;
};

Selector ParseSelector(const std::string &text) {
  Selector s;
  size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw GrammarError("collector selector '" + text +
                       "' must look like type:FEATURE");
  }
  s.type = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  size_t slash = rest.find('/');
  s.feature = rest.substr(0, slash);
  if (slash != std::string::npos) {
    std::string filter = rest.substr(slash + 1);
    size_t eq = filter.find('=');
    if (eq == std::string::npos) {
      throw GrammarError("collector filter '" + filter + "' needs '='");
    }
    s.filter_feature = filter.substr(0, eq);
    s.filter_value = filter.substr(eq + 1);
  }
  return s;
}

Value CollectLeft(const std::vector<Value> &args, CallContext &ctx) {
  if (ctx.stream == nullptr) return std::nullopt;
  std::vector<Selector> selectors;
  for (const auto &a : args) {
    if (a) selectors.push_back(ParseSelector(*a));
  }
  const auto &items = ctx.stream->items();
  size_t clause_start = 0;
  for (const auto &item : items) {
    if (item.span().end > ctx.match.start) continue;
    if (item.type() != kTokenType && item.type() != kBasicTokenType) continue;
    const std::string *surface = item.Get("SURFACE");
    if (surface != nullptr && IsClauseBoundary(*surface)) {
      clause_start = std::max(clause_start, item.span().end);
    }
  }
  struct Candidate {
    Span span;
    size_t order;
    std::string value;
  };
  std::vector<Candidate> candidates;
  for (size_t k = 0; k < items.size(); ++k) {
    const auto &item = items[k];
    if (item.span().start < clause_start || item.span().end > ctx.match.start) {
      continue;
    }
    for (const auto &sel : selectors) {
      if (item.type() != sel.type) continue;
      if (!sel.filter_feature.empty()) {
        const std::string *f = item.Get(sel.filter_feature);
        if (f == nullptr || *f != sel.filter_value) continue;
      }
      const std::string *value = item.Get(sel.feature);
      if (value == nullptr) continue;
      candidates.push_back(Candidate{item.span(), k, *value});
      break;
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate &a, const Candidate &b) {
                     if (a.span.start != b.span.start) {
                       return a.span.start < b.span.start;
                     }
                     return a.span.length() > b.span.length();
                   });
  std::vector<Span> taken;
  std::vector<std::string> values;
  for (const auto &c : candidates) {
    bool overlaps = false;
    for (const auto &t : taken) overlaps = overlaps || t.Overlaps(c.span);
    if (overlaps) continue;
    taken.push_back(c.span);
    if (std::find(values.begin(), values.end(), c.value) == values.end()) {
      values.push_back(c.value);
    }
  }
  if (values.empty()) return std::nullopt;
  ctx.output.start = std::min(ctx.output.start, taken.front().start);
  return Join(values, "-");
}

Value AdverbOn(Dimension dimension, const std::vector<Value> &args,
               CallContext &ctx) {
  const Value &verb = args[0];
  const Value &value = args[1];
  if (!value) return verb;
  TamClass tam;
  std::string atom = verb.value_or("");
  switch (dimension) {
    case Dimension::kVolitional:
      if (!atom.empty()) tam.volitional = ParseVolitional(atom);
      break;
    case Dimension::kEpistemic:
      if (!atom.empty()) tam.epistemic = ParseEpistemic(atom);
      break;
    case Dimension::kTemporal:
      if (!atom.empty()) tam.temporal = ParseTemporal(atom);
      break;
  }
  static const TransformTable kNoTransforms;
  const TransformTable &transforms =
      ctx.transforms != nullptr ? *ctx.transforms : kNoTransforms;
  Adverb adverb{dimension, *value, args.size() > 2 ? args[2].value_or("") : ""};
  TamClass out = ApplyAdverb(tam, adverb, transforms).tam;
  switch (dimension) {
    case Dimension::kVolitional:
      if (out.volitional) return Render(*out.volitional);
      break;
    case Dimension::kEpistemic:
      if (out.epistemic) return Render(*out.epistemic);
      break;
    case Dimension::kTemporal:
      if (out.temporal) return Render(*out.temporal);
      break;
  }
  return std::nullopt;
}

FunctionRegistry MakeBuiltins() {
  FunctionRegistry r;
  r.Register("Conc", 0, -1, [](const std::vector<Value> &args, CallContext &) {
    return Value(Join(Present(args), ""));
  });
  r.Register("ConcWithBlanks", 0, -1,
             [](const std::vector<Value> &args, CallContext &) {
               return Value(Join(Present(args), " "));
             });
  r.Register("DashJoin", 0, -1,
             [](const std::vector<Value> &args, CallContext &) {
               return Value(Join(Present(args), "-"));
             });
  r.Register("DashSlots", 1, 1,
             [](const std::vector<Value> &args, CallContext &) -> Value {
               if (!args[0]) return std::nullopt;
               return "--" + *args[0];
             });
  r.Register("PersonNameInitial", 0, -1,
             [](const std::vector<Value> &args, CallContext &) {
               std::vector<std::string> parts = Present(args);
               for (auto &p : parts) p += ".";
               return Value(Join(parts, " "));
             });
  r.Register("IsReliablePersonName", 1, 1,
             [](const std::vector<Value> &args, CallContext &) {
               std::vector<std::string> words =
                   SplitWhitespace(args[0].value_or(""));
               bool reliable = words.size() >= 2;
               for (const auto &w : words) {
                 reliable = reliable && unicode::Decode(w).size() >= 2;
               }
               return Value(reliable ? "true" : "false");
             });
  r.Register("Combine", 1, -1,
             [](const std::vector<Value> &args, CallContext &) -> Value {
               for (const auto &a : args) {
                 if (a && !a->empty()) return a;
               }
               return std::nullopt;
             });
  r.Register("TempSpec", 2, 2,
             [](const std::vector<Value> &args, CallContext &) -> Value {
               if (!args[0]) return std::nullopt;
               return RenderTempSpec(TempSpec{*args[0], args[1].value_or("")});
             });
  r.Register("AdverbTemporal", 2, 3,
             [](const std::vector<Value> &args, CallContext &ctx) {
               return AdverbOn(Dimension::kTemporal, args, ctx);
             });
  r.Register("AdverbEpistemic", 2, 3,
             [](const std::vector<Value> &args, CallContext &ctx) {
               return AdverbOn(Dimension::kEpistemic, args, ctx);
             });
  r.Register("AdverbVolitional", 2, 3,
             [](const std::vector<Value> &args, CallContext &ctx) {
               return AdverbOn(Dimension::kVolitional, args, ctx);
             });
  r.Register("CollectLeft", 1, -1, CollectLeft);
  return r;
}

}  // namespace

const FunctionRegistry &FunctionRegistry::Builtins() {
  static const FunctionRegistry kBuiltins = MakeBuiltins();
  return kBuiltins;
}

}  // namespace tamx
