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

#include "tamx/grammar.h"

#include <cctype>
#include <utility>

#include "tamx/error.h"

namespace tamx {

std::string_view SearchModeName(SearchMode mode) {
  switch (mode) {
    case SearchMode::kLongestMatch: return "longest_match";
    case SearchMode::kAllMatches: return "all_matches";
    case SearchMode::kAllLongestMatches: return "all_longest_matches";
  }
  return "all_longest_matches";
}

std::optional<SearchMode> ParseSearchMode(std::string_view name) {
  if (name == "longest_match") return SearchMode::kLongestMatch;
  if (name == "all_matches") return SearchMode::kAllMatches;
  if (name == "all_longest_matches") return SearchMode::kAllLongestMatches;
  return std::nullopt;
}

std::string_view OutputModeName(OutputMode mode) {
  return mode == OutputMode::kAll ? "all" : "grammar";
}

PatternElement PatternElement::Constraint(ConstraintSet c) {
  PatternElement e;
  e.kind = Kind::kConstraint;
  e.constraint = std::move(c);
  return e;
}

PatternElement PatternElement::Sequence(std::vector<PatternElement> items) {
  PatternElement e;
  e.kind = Kind::kSequence;
  e.children = std::move(items);
  return e;
}

PatternElement PatternElement::Alternation(
    std::vector<PatternElement> branches) {
  PatternElement e;
  e.kind = Kind::kAlternation;
  e.children = std::move(branches);
  return e;
}

PatternElement PatternElement::Optional(PatternElement item) {
  PatternElement e;
  e.kind = Kind::kOptional;
  e.children.push_back(std::move(item));
  return e;
}

PatternElement PatternElement::Labeled(PatternElement item, std::string label) {
  PatternElement e;
  e.kind = Kind::kLabeled;
  e.children.push_back(std::move(item));
  e.label = std::move(label);
  return e;
}

void PatternElement::CollectVariables(std::set<std::string> &out) const {
  if (kind == Kind::kConstraint) {
    for (const auto &c : constraint.constraints) {
      if (c.kind == FeatureConstraint::Kind::kVariable) out.insert(c.text);
    }
  }
  for (const auto &child : children) child.CollectVariables(out);
}

void PatternElement::CollectLabels(std::vector<std::string> &out) const {
  if (kind == Kind::kLabeled) out.push_back(label);
  for (const auto &child : children) child.CollectLabels(out);
}

void PatternElement::CollectConstraints(
    std::vector<const ConstraintSet *> &out) const {
  if (kind == Kind::kConstraint) out.push_back(&constraint);
  for (const auto &child : children) child.CollectConstraints(out);
}

namespace {

enum class Tok { kIdent, kString, kVar, kModule, kPunct, kEnd };

struct Lexeme {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 0;
  int column = 0;
};

bool IsIdentStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool IsIdentChar(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

std::vector<Lexeme> Lex(std::string_view text) {
  std::vector<Lexeme> out;
  int line = 1;
  size_t line_start = 0;
  size_t i = 0;
  auto at = [&](size_t k) -> char { return k < text.size() ? text[k] : '\0'; };
  while (i < text.size()) {
    char c = text[i];
    int column = static_cast<int>(i - line_start) + 1;
    if (c == '\n') {
      ++line;
      line_start = ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && at(i + 1) == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    // Stray '>' glyphs are layout noise; only "->" means something.
    if (c == '>') {
      ++i;
      continue;
    }
    Lexeme lex;
    lex.line = line;
    lex.column = column;
    if (c == '"') {
      std::string value;
      ++i;
      while (true) {
        if (i >= text.size() || text[i] == '\n') {
          throw ParseError("unterminated string literal", line, column);
        }
        if (text[i] == '\\' && i + 1 < text.size()) {
          value += text[i + 1];
          i += 2;
          continue;
        }
        if (text[i] == '"') break;
        value += text[i++];
      }
      ++i;
      lex.kind = Tok::kString;
      lex.text = std::move(value);
    } else if (c == '#') {
      size_t b = ++i;
      while (i < text.size() && IsIdentChar(text[i])) ++i;
      if (i == b) throw ParseError("'#' must start a variable name", line, column);
      lex.kind = Tok::kVar;
      lex.text = std::string(text.substr(b, i - b));
    } else if (c == '<') {
      size_t close = text.find('>', i);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated module reference", line, column);
      }
      lex.kind = Tok::kModule;
      lex.text = std::string(text.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (IsIdentStart(static_cast<unsigned char>(c))) {
      size_t b = i;
      while (i < text.size() &&
             (IsIdentChar(text[i]) || (text[i] == '-' && at(i + 1) != '>'))) {
        ++i;
      }
      lex.kind = Tok::kIdent;
      lex.text = std::string(text.substr(b, i - b));
    } else if (c == ':' && at(i + 1) == '=') {
      lex.kind = Tok::kPunct;
      lex.text = ":=";
      i += 2;
    } else if (c == '-' && at(i + 1) == '>') {
      lex.kind = Tok::kPunct;
      lex.text = "->";
      i += 2;
    } else if (std::string_view("()[]{}|?:,&.").find(c) != std::string_view::npos) {
      lex.kind = Tok::kPunct;
      lex.text = std::string(1, c);
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line,
                       column);
    }
    out.push_back(std::move(lex));
  }
  Lexeme end;
  end.line = line;
  end.column = static_cast<int>(i - line_start) + 1;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::vector<Lexeme> lexemes, const TypeRegistry &registry)
      : lex_(std::move(lexemes)), registry_(registry) {}

  GrammarLevel Parse(std::string name) {
    GrammarLevel level;
    level.name = std::move(name);
    if (IsIdent("SETTINGS")) ParseSettings(level.settings);
    if (!IsIdent("PATTERNS")) Fail("expected PATTERNS");
    Next();
    while (!IsIdent("END_PATTERNS")) {
      if (Peek().kind == Tok::kEnd) Fail("missing END_PATTERNS");
      level.rules.push_back(ParseRule());
    }
    Next();
    if (Peek().kind != Tok::kEnd) Fail("unexpected text after END_PATTERNS");
    for (size_t i = 0; i < level.rules.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (level.rules[i].name == level.rules[j].name) {
          throw ParseError("rule '" + level.rules[i].name + "' defined twice",
                           level.rules[i].line);
        }
      }
    }
    return level;
  }

 private:
  const Lexeme &Peek(size_t ahead = 0) const {
    size_t k = std::min(pos_ + ahead, lex_.size() - 1);
    return lex_[k];
  }
  const Lexeme &Next() {
    const Lexeme &l = lex_[pos_];
    if (pos_ + 1 < lex_.size()) ++pos_;
    return l;
  }
  bool IsPunct(std::string_view p, size_t ahead = 0) const {
    return Peek(ahead).kind == Tok::kPunct && Peek(ahead).text == p;
  }
  bool IsIdent(std::string_view word) const {
    return Peek().kind == Tok::kIdent && Peek().text == word;
  }
  [[noreturn]] void Fail(const std::string &message) const {
    const Lexeme &l = Peek();
    std::string found = l.kind == Tok::kEnd ? "end of input" : "'" + l.text + "'";
    throw ParseError(message + ", found " + found, l.line, l.column);
  }
  void Expect(std::string_view p) {
    if (!IsPunct(p)) Fail("expected '" + std::string(p) + "'");
    Next();
  }
  std::string ExpectIdent(const char *what) {
    if (Peek().kind != Tok::kIdent) Fail(std::string("expected ") + what);
    return Next().text;
  }

  void ParseSettings(GrammarSettings &settings) {
    Next();
    if (IsPunct(":")) Next();
    Expect("{");
    while (!IsPunct("}")) {
      std::string key = ExpectIdent("setting name");
      Expect(":");
      if (key == "MODULES") {
        while (Peek().kind == Tok::kModule || Peek().kind == Tok::kIdent) {
          if (Peek().kind == Tok::kIdent &&
              (Peek().text == "SEARCH_MODE" || Peek().text == "OUTPUT" ||
               Peek().text == "MODULES")) {
            break;
          }
          settings.modules.push_back(Next().text);
          if (IsPunct(",")) Next();
        }
      } else if (key == "SEARCH_MODE") {
        std::string mode = ExpectIdent("search mode");
        auto parsed = ParseSearchMode(mode);
        if (!parsed) {
          throw ParseError("unknown search mode '" + mode + "'", lex_[pos_ - 1].line);
        }
        settings.search_mode = *parsed;
      } else if (key == "OUTPUT") {
        std::string mode = ExpectIdent("output mode");
        if (mode == "grammar") {
          settings.output_mode = OutputMode::kGrammar;
        } else if (mode == "all") {
          settings.output_mode = OutputMode::kAll;
        } else {
          throw ParseError("unknown output mode '" + mode + "'", lex_[pos_ - 1].line);
        }
      } else {
        throw ParseError("unknown setting '" + key + "'", lex_[pos_ - 1].line);
      }
    }
    Next();
  }

  GrammarRule ParseRule() {
    GrammarRule rule;
    rule.line = Peek().line;
    rule.name = ExpectIdent("rule name");
    Expect(":=");
    rule.lhs = ParseAlternation();
    Expect("->");
    if (Peek().kind == Tok::kIdent && IsPunct(":", 1)) {
      rule.output_label = Next().text;
      Next();
    }
    rule.output_type = ExpectIdent("output type");
    Expect("&");
    Expect("[");
    while (!IsPunct("]")) {
      TemplateAssignment a;
      a.feature = ExpectIdent("feature name");
      Expect(":");
      a.value = ParseValue();
      rule.assignments.push_back(std::move(a));
      if (IsPunct(",")) {
        Next();
      } else if (!IsPunct("]")) {
        Fail("expected ',' or ']'");
      }
    }
    Next();
    while (IsPunct("&")) {
      Next();
      if (Peek().kind != Tok::kVar) Fail("expected '#variable := ...'");
      AuxDefinition aux;
      aux.variable = Next().text;
      Expect(":=");
      aux.call = ParseValue();
      if (aux.call.kind != ValueExpr::Kind::kCall) {
        Fail("auxiliary definitions must call a function");
      }
      rule.aux.push_back(std::move(aux));
    }
    Expect(".");
    Validate(rule);
    return rule;
  }

  ValueExpr ParseValue() {
    ValueExpr v;
    const Lexeme &l = Peek();
    if (l.kind == Tok::kString) {
      v.kind = ValueExpr::Kind::kLiteral;
      v.text = Next().text;
    } else if (l.kind == Tok::kVar) {
      v.kind = ValueExpr::Kind::kVariable;
      v.text = Next().text;
    } else if (l.kind == Tok::kIdent && IsPunct("(", 1)) {
      v.kind = ValueExpr::Kind::kCall;
      v.text = Next().text;
      Next();
      while (!IsPunct(")")) {
        ValueExpr arg = ParseValue();
        if (arg.kind == ValueExpr::Kind::kCall) Fail("nested calls are not supported");
        v.args.push_back(std::move(arg));
        if (IsPunct(",")) {
          Next();
        } else if (!IsPunct(")")) {
          Fail("expected ',' or ')'");
        }
      }
      Next();
    } else {
      Fail("expected a string, #variable or function call");
    }
    return v;
  }

  PatternElement ParseAlternation() {
    std::vector<PatternElement> branches;
    branches.push_back(ParseSequence());
    while (IsPunct("|")) {
      Next();
      branches.push_back(ParseSequence());
    }
    if (branches.size() == 1) return std::move(branches[0]);
    return PatternElement::Alternation(std::move(branches));
  }

  PatternElement ParseSequence() {
    std::vector<PatternElement> items;
    while (IsPunct("(") || Peek().kind == Tok::kIdent) {
      items.push_back(ParsePostfix());
    }
    if (items.empty()) Fail("expected a pattern element");
    if (items.size() == 1) return std::move(items[0]);
    return PatternElement::Sequence(std::move(items));
  }

  PatternElement ParsePostfix() {
    PatternElement e = ParsePrimary();
    while (true) {
      if (IsPunct("?")) {
        Next();
        e = PatternElement::Optional(std::move(e));
      } else if (IsPunct(":") && Peek(1).kind == Tok::kIdent) {
        Next();
        e = PatternElement::Labeled(std::move(e), Next().text);
      } else {
        return e;
      }
    }
  }

  PatternElement ParsePrimary() {
    if (IsPunct("(")) {
      Next();
      PatternElement inner = ParseAlternation();
      Expect(")");
      return inner;
    }
    const Lexeme &type_lex = Peek();
    ConstraintSet cs;
    cs.type_name = ExpectIdent("type name");
    if (!registry_.Has(cs.type_name)) {
      throw ParseError("unknown type '" + cs.type_name + "'", type_lex.line,
                       type_lex.column);
    }
    if (IsPunct("&")) {
      Next();
      Expect("[");
      while (!IsPunct("]")) {
        const Lexeme &feat_lex = Peek();
        FeatureConstraint fc;
        fc.feature = ExpectIdent("feature name");
        Expect(":");
        if (Peek().kind == Tok::kString) {
          fc.kind = FeatureConstraint::Kind::kLiteral;
        } else if (Peek().kind == Tok::kVar) {
          fc.kind = FeatureConstraint::Kind::kVariable;
        } else {
          Fail("expected a string or #variable");
        }
        fc.text = Next().text;
        if (!registry_.Get(cs.type_name).Declares(fc.feature)) {
          throw ParseError("feature '" + fc.feature +
                               "' is not declared for type '" + cs.type_name + "'",
                           feat_lex.line, feat_lex.column);
        }
        cs.constraints.push_back(std::move(fc));
        if (IsPunct(",")) {
          Next();
        } else if (!IsPunct("]")) {
          Fail("expected ',' or ']'");
        }
      }
      Next();
    }
    return PatternElement::Constraint(std::move(cs));
  }

  void Validate(const GrammarRule &rule) const {
    auto fail = [&](const std::string &message) {
      throw GrammarError("rule '" + rule.name + "' (line " +
                         std::to_string(rule.line) + "): " + message);
    };
    std::vector<std::string> labels;
    rule.lhs.CollectLabels(labels);
    for (size_t i = 0; i < labels.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (labels[i] == labels[j]) fail("label '" + labels[i] + "' used twice");
      }
    }
    if (!rule.output_label.empty()) {
      bool found = false;
      for (const auto &l : labels) found = found || l == rule.output_label;
      if (!found) fail("output label '" + rule.output_label + "' is not on the left-hand side");
    }
    const TypeDeclaration *out = registry_.Find(rule.output_type);
    if (out == nullptr) fail("unknown output type '" + rule.output_type + "'");
    for (const auto &a : rule.assignments) {
      if (!out->Declares(a.feature)) {
        fail("feature '" + a.feature + "' is not declared for type '" +
             rule.output_type + "'");
      }
    }

    std::set<std::string> bound;
    rule.lhs.CollectVariables(bound);
    std::set<std::string> aux_defined;
    auto check_args = [&](const ValueExpr &call, const std::set<std::string> &known) {
      for (const auto &arg : call.args) {
        if (arg.kind == ValueExpr::Kind::kVariable && !known.count(arg.text)) {
          fail("variable '#" + arg.text + "' is not bound");
        }
      }
    };
    std::set<std::string> known = bound;
    for (const auto &aux : rule.aux) {
      check_args(aux.call, known);
      known.insert(aux.variable);
    }
    for (const auto &a : rule.assignments) {
      if (a.value.kind == ValueExpr::Kind::kVariable && !known.count(a.value.text)) {
        fail("variable '#" + a.value.text + "' is not bound");
      }
      if (a.value.kind == ValueExpr::Kind::kCall) check_args(a.value, known);
    }
  }

  std::vector<Lexeme> lex_;
  size_t pos_ = 0;
  const TypeRegistry &registry_;
};

}  // namespace

GrammarLevel ParseGrammar(std::string_view text, const TypeRegistry &registry,
                          std::string name) {
  Parser parser(Lex(text), registry);
  return parser.Parse(std::move(name));
}

}  // namespace tamx
