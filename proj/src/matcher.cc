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

#include "tamx/matcher.h"

#include <algorithm>
#include <tuple>
#include <utility>

#include "tamx/error.h"

namespace tamx {

Stream::Stream(size_t token_count, std::vector<FlatFeatureStructure> items)
    : token_count_(token_count) {
  std::stable_sort(items.begin(), items.end(),
                   [](const FlatFeatureStructure &a, const FlatFeatureStructure &b) {
                     return a.span().start < b.span().start;
                   });
  size_t group = 0;
  for (auto &item : items) {
    if (item.span().start >= token_count || item.span().end > token_count) {
      throw Error("stream item of type '" + item.type() +
                  "' lies outside the token range");
    }
    if (!items_.empty() && items_.back().span().start != item.span().start) {
      group = items_.size();
    }
    bool duplicate = false;
    for (size_t k = group; k < items_.size() && !duplicate; ++k) {
      duplicate = items_[k] == item;
    }
    if (!duplicate) items_.push_back(std::move(item));
  }
  first_.assign(token_count_ + 1, items_.size());
  for (size_t k = items_.size(); k-- > 0;) {
    first_[items_[k].span().start] = k;
  }
  for (size_t p = token_count_; p-- > 0;) {
    first_[p] = std::min(first_[p], first_[p + 1]);
  }
}

size_t Stream::NextOccupied(size_t pos) const {
  while (pos < token_count_ && first_[pos] == first_[pos + 1]) ++pos;
  return std::min(pos, token_count_);
}

std::pair<size_t, size_t> Stream::ItemsAt(size_t pos) const {
  if (pos >= token_count_) return {items_.size(), items_.size()};
  return {first_[pos], first_[pos + 1]};
}

Stream BuildStream(const std::vector<Token> &tokens,
                   const std::vector<CompoundToken> &compounds,
                   std::vector<FlatFeatureStructure> annotations,
                   const TypeRegistry &registry) {
  std::vector<FlatFeatureStructure> items;
  bool has_token = registry.Has(kTokenType);
  bool has_basic = registry.Has(kBasicTokenType);
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token &t = tokens[i];
    Span span{i, i + 1};
    if (has_token) {
      items.push_back(MakeFfs(
          registry, kTokenType,
          {{"TYPE", std::string(TokenClassName(t.token_class))},
           {"SURFACE", t.surface}},
          span));
    }
    if (has_basic && (t.token_class == TokenClass::kPunctuation ||
                      t.token_class == TokenClass::kApostrophe)) {
      items.push_back(
          MakeFfs(registry, kBasicTokenType, {{"SURFACE", t.surface}}, span));
    }
  }
  if (has_token) {
    for (const auto &c : compounds) {
      items.push_back(MakeFfs(
          registry, kTokenType,
          {{"TYPE", std::string(TokenClassName(c.token.token_class))},
           {"SURFACE", c.token.surface}},
          Span{c.first, c.last}));
    }
  }
  for (auto &a : annotations) items.push_back(std::move(a));
  return Stream(tokens.size(), std::move(items));
}

namespace {

struct State {
  size_t cursor = 0;
  Bindings bindings;
  std::map<std::string, Span> labels;
  std::vector<size_t> items;
};

class Matcher {
 public:
  explicit Matcher(const Stream &stream) : stream_(stream) {}

  void Run(const PatternElement &e, const State &in, std::vector<State> &out) {
    switch (e.kind) {
      case PatternElement::Kind::kConstraint: {
        size_t p = in.items.empty() ? in.cursor : stream_.NextOccupied(in.cursor);
        auto [b, end] = stream_.ItemsAt(p);
        for (size_t k = b; k < end; ++k) {
          const FlatFeatureStructure &item = stream_.items()[k];
          auto captured = Matches(item, e.constraint, in.bindings);
          if (!captured) continue;
          State s = in;
          s.cursor = item.span().end;
          s.bindings.insert(captured->begin(), captured->end());
          s.items.push_back(k);
          out.push_back(std::move(s));
        }
        return;
      }
      case PatternElement::Kind::kSequence: {
        std::vector<State> current{in};
        for (const auto &child : e.children) {
          std::vector<State> next;
          for (const auto &s : current) Run(child, s, next);
          current = std::move(next);
          if (current.empty()) return;
        }
        for (auto &s : current) out.push_back(std::move(s));
        return;
      }
      case PatternElement::Kind::kAlternation:
        for (const auto &child : e.children) Run(child, in, out);
        return;
      case PatternElement::Kind::kOptional:
        Run(e.children[0], in, out);
        out.push_back(in);
        return;
      case PatternElement::Kind::kLabeled: {
        std::vector<State> inner;
        Run(e.children[0], in, inner);
        for (auto &s : inner) {
          Span span{s.cursor, s.cursor};
          if (s.items.size() > in.items.size()) {
            span.start = stream_.items()[s.items[in.items.size()]].span().start;
          }
          s.labels[e.label] = span;
          out.push_back(std::move(s));
        }
        return;
      }
    }
  }

 private:
  const Stream &stream_;
};

Value Evaluate(const ValueExpr &v, const Bindings &vars, CallContext &call,
               const EngineContext &ctx) {
  switch (v.kind) {
    case ValueExpr::Kind::kLiteral:
      return v.text;
    case ValueExpr::Kind::kVariable: {
      auto it = vars.find(v.text);
      if (it == vars.end()) return std::nullopt;
      return it->second;
    }
    case ValueExpr::Kind::kCall: {
      std::vector<Value> args;
      args.reserve(v.args.size());
      for (const auto &a : v.args) args.push_back(Evaluate(a, vars, call, ctx));
      return ctx.functions->Call(v.text, args, call);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Match> MatchAt(const PatternElement &lhs, const Stream &stream,
                           size_t pos) {
  std::vector<Match> out;
  if (pos >= stream.token_count()) return out;
  State start;
  start.cursor = pos;
  std::vector<State> states;
  Matcher(stream).Run(lhs, start, states);
  for (auto &s : states) {
    if (s.items.empty()) continue;
    bool seen = false;
    for (const auto &m : out) {
      if (m.span.end == s.cursor && m.labels == s.labels &&
          m.bindings == s.bindings) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    Match m;
    m.span = Span{stream.items()[s.items.front()].span().start, s.cursor};
    m.bindings = std::move(s.bindings);
    m.labels = std::move(s.labels);
    m.items = std::move(s.items);
    out.push_back(std::move(m));
  }
  return out;
}

FlatFeatureStructure ApplyRhs(const GrammarRule &rule, const Match &match,
                              const Stream &stream, const EngineContext &ctx) {
  CallContext call;
  call.stream = &stream;
  call.match = match.span;
  call.output = match.span;
  call.transforms = ctx.transforms;
  if (!rule.output_label.empty()) {
    auto it = match.labels.find(rule.output_label);
    if (it != match.labels.end() && it->second.length() > 0) {
      call.output = it->second;
    }
  }
  Bindings vars = match.bindings;
  for (const auto &aux : rule.aux) {
    Value v = Evaluate(aux.call, vars, call, ctx);
    if (v) {
      vars[aux.variable] = *v;
    } else {
      vars.erase(aux.variable);
    }
  }
  Assignments out;
  for (const auto &a : rule.assignments) {
    Value v = Evaluate(a.value, vars, call, ctx);
    if (v) out[a.feature] = *v;
  }
  if (ctx.registry->Get(rule.output_type).Declares("RULE")) {
    out["RULE"] = rule.name;
  }
  return MakeFfs(*ctx.registry, rule.output_type, std::move(out), call.output);
}

Stream RunLevel(const GrammarLevel &level, const Stream &input,
                const EngineContext &ctx, std::optional<SearchMode> mode) {
  SearchMode search = mode.value_or(level.settings.search_mode);
  std::vector<FlatFeatureStructure> produced;
  size_t n = input.token_count();
  size_t p = input.NextOccupied(0);
  while (p < n) {
    std::vector<std::pair<const GrammarRule *, Match>> candidates;
    size_t longest = 0;
    for (const auto &rule : level.rules) {
      for (auto &m : MatchAt(rule.lhs, input, p)) {
        longest = std::max(longest, m.span.end);
        candidates.emplace_back(&rule, std::move(m));
      }
    }
    if (candidates.empty()) {
      p = input.NextOccupied(p + 1);
      continue;
    }
    switch (search) {
      case SearchMode::kLongestMatch:
        for (const auto &[rule, m] : candidates) {
          if (m.span.end == longest) {
            produced.push_back(ApplyRhs(*rule, m, input, ctx));
            break;
          }
        }
        p = input.NextOccupied(longest);
        break;
      case SearchMode::kAllMatches:
        for (const auto &[rule, m] : candidates) {
          produced.push_back(ApplyRhs(*rule, m, input, ctx));
        }
        p = input.NextOccupied(p + 1);
        break;
      case SearchMode::kAllLongestMatches:
        for (const auto &[rule, m] : candidates) {
          if (m.span.end == longest) {
            produced.push_back(ApplyRhs(*rule, m, input, ctx));
          }
        }
        p = input.NextOccupied(p + 1);
        break;
    }
  }
  std::vector<FlatFeatureStructure> items;
  if (level.settings.output_mode == OutputMode::kAll) items = input.items();
  for (auto &f : produced) items.push_back(std::move(f));
  return Stream(n, std::move(items));
}

Stream RunCascade(const Cascade &cascade, const Stream &input,
                  const EngineContext &ctx, std::optional<SearchMode> mode) {
  Stream current = input;
  for (const auto &level : cascade.levels) {
    current = RunLevel(level, current, ctx, mode);
  }
  return current;
}

Stream RunCascade(const Cascade &cascade, std::string_view source,
                  const std::vector<Token> &tokens,
                  const CompiledLexicon &lexicon, const EngineContext &ctx,
                  std::optional<SearchMode> mode) {
  Stream stream = BuildStream(tokens, ApostropheCompounds(source, tokens),
                              Annotate(tokens, lexicon, *ctx.registry),
                              *ctx.registry);
  return RunCascade(cascade, stream, ctx, mode);
}

}  // namespace tamx
