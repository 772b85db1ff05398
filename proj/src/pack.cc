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

#include "tamx/pack.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "tamx/error.h"
#include "tamx/strings.h"

namespace tamx {

namespace fs = std::filesystem;

namespace {

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string> &TokenClassNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (TokenClass c :
         {TokenClass::kFirstCapitalWord, TokenClass::kLowercaseWord,
          TokenClass::kMixedWordFirstCapital,
          TokenClass::kWordWithHyphenFirstCapital,
          TokenClass::kWordWithApostropheFirstCapital,
          TokenClass::kAnyNaturalNumber, TokenClass::kPunctuation,
          TokenClass::kApostrophe, TokenClass::kOther}) {
      names.emplace_back(TokenClassName(c));
    }
    return names;
  }();
  return kNames;
}

bool IsCategoryValue(std::string_view feature, std::string_view value) {
  if (feature == "VOLITIONAL") {
    return IsValidCategory(Dimension::kVolitional, value);
  }
  if (feature == "EPISTEMIC") {
    return IsValidCategory(Dimension::kEpistemic, value);
  }
  if (feature == "TEMPORAL") {
    const auto &atoms = TemporalSpecAtoms();
    return IsValidCategory(Dimension::kTemporal, value) ||
           std::find(atoms.begin(), atoms.end(), value) != atoms.end();
  }
  return true;
}

void CheckCalls(const ValueExpr &v, const FunctionRegistry &functions,
                const std::string &where, std::vector<std::string> &out) {
  if (v.kind != ValueExpr::Kind::kCall) return;
  try {
    functions.CheckArity(v.text, v.args.size());
  } catch (const GrammarError &e) {
    out.push_back(where + ": " + e.what());
  }
}

}  // namespace

EngineContext GrammarPack::context() const {
  EngineContext ctx;
  ctx.registry = &registry;
  ctx.transforms = &transforms;
  return ctx;
}

std::vector<VerbMarker> ParseVerbMarkers(std::string_view text) {
  std::vector<VerbMarker> out;
  int line_no = 0;
  for (const auto &raw : Lines(text)) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = Split(line, '|');
    if (fields.size() != 2 || Trim(fields[0]).empty() ||
        Trim(fields[1]).empty()) {
      throw ParseError("expected 'lexicon key | marker pattern'", line_no);
    }
    out.push_back(VerbMarker{Trim(fields[0]), Trim(fields[1]), line_no});
  }
  return out;
}

std::vector<std::string> ValidatePack(const GrammarPack &pack,
                                      std::vector<std::string> *warnings) {
  std::vector<std::string> v;
  const FunctionRegistry &functions = *pack.context().functions;

  std::set<std::string> gtypes;
  for (const auto &e : pack.lexicon_entries) {
    auto it = e.assignments.find("GTYPE");
    if (it != e.assignments.end()) gtypes.insert(it->second);
    for (const auto &[feature, value] : e.assignments) {
      if (!IsCategoryValue(feature, value)) {
        v.push_back("lexicon.lex line " + std::to_string(e.line) + ": " +
                    feature + " value '" + value + "' is not a category");
      }
    }
  }

  for (size_t li = 0; li < pack.cascade.levels.size(); ++li) {
    const GrammarLevel &level = pack.cascade.levels[li];
    for (const auto &rule : level.rules) {
      std::string where = "rule '" + rule.name + "' (" + level.name + ")";
      std::vector<const ConstraintSet *> constraints;
      rule.lhs.CollectConstraints(constraints);
      for (const ConstraintSet *cs : constraints) {
        for (const auto &c : cs->constraints) {
          if (c.kind != FeatureConstraint::Kind::kLiteral) continue;
          if (cs->type_name == kGazetteerType && c.feature == "GTYPE" &&
              !gtypes.count(c.text)) {
            v.push_back(where + ": GTYPE \"" + c.text +
                        "\" occurs in no lexicon entry");
          }
          if (cs->type_name == kTokenType && c.feature == "TYPE") {
            const auto &names = TokenClassNames();
            if (std::find(names.begin(), names.end(), c.text) == names.end()) {
              v.push_back(where + ": \"" + c.text + "\" is not a token class");
            }
          }
          if (!IsCategoryValue(c.feature, c.text)) {
            v.push_back(where + ": " + c.feature + " value \"" + c.text +
                        "\" is not a category");
          }
        }
      }
      for (const auto &aux : rule.aux) CheckCalls(aux.call, functions, where, v);
      for (const auto &a : rule.assignments) {
        CheckCalls(a.value, functions, where, v);
      }
    }
  }

  for (const auto &m : pack.verb_markers) {
    std::string where = "verb_markers.tab line " + std::to_string(m.line);
    if (!pack.markers.Has(m.pattern)) {
      v.push_back(where + ": unknown marker pattern '" + m.pattern + "'");
      continue;
    }
    std::vector<std::string> key;
    for (const auto &t : pack.tokenizer.Tokenize(m.key)) key.push_back(t.surface);
    const auto &entries = pack.lexicon.Lookup(key);
    if (entries.empty()) {
      v.push_back(where + ": '" + m.key + "' is not a lexicon key");
      continue;
    }
    for (const auto &a : entries) {
      auto get = [&](const char *f) {
        auto it = a.find(f);
        return it == a.end() ? std::string() : it->second;
      };
      if (get("VOLITIONAL").empty() || get("EPISTEMIC").empty() ||
          get("TEMPORAL").empty()) {
        continue;
      }
      TamClass tam;
      try {
        tam = MakeTamClass(get("VOLITIONAL"), get("EPISTEMIC"), get("TEMPORAL"));
      } catch (const TamError &) {
        continue;  // reported above
      }
      if (!pack.markers.Allows(m.pattern, tam)) {
        v.push_back(where + ": '" + m.key + "' carries " + RenderTriple(tam) +
                    ", which " + m.pattern + " does not express");
      }
    }
  }

  if (warnings != nullptr) {
    std::set<std::string> available = {std::string(kTokenType),
                                       std::string(kBasicTokenType),
                                       std::string(kGazetteerType)};
    const auto &levels = pack.cascade.levels;
    for (size_t li = 0; li < levels.size(); ++li) {
      std::set<std::string> produced;
      for (const auto &rule : levels[li].rules) {
        produced.insert(rule.output_type);
        std::vector<const ConstraintSet *> constraints;
        rule.lhs.CollectConstraints(constraints);
        for (const ConstraintSet *cs : constraints) {
          if (!available.count(cs->type_name)) {
            warnings->push_back(levels[li].name + ": rule '" + rule.name +
                                "' consumes type '" + cs->type_name +
                                "', which no earlier level produces");
          }
        }
      }
      if (levels[li].settings.output_mode == OutputMode::kGrammar) {
        available.clear();
      }
      available.insert(produced.begin(), produced.end());
    }
  }
  return v;
}

GrammarPack LoadPack(const fs::path &dir) {
  GrammarPack pack;
  pack.root = dir;
  std::vector<std::string> violations;
  auto attempt = [&](const std::string &file, auto &&fn) {
    try {
      fn(ReadFile(dir / file));
    } catch (const Error &e) {
      violations.push_back(file + ": " + e.what());
    }
  };

  bool have_types = false;
  attempt("types.decl", [&](const std::string &text) {
    pack.registry = TypeRegistry::Parse(text);
    have_types = true;
  });
  attempt("manifest", [&](const std::string &text) {
    for (const auto &raw : Lines(text)) {
      std::string line = Trim(raw);
      if (!line.empty() && line[0] != '#') pack.level_files.push_back(line);
    }
    if (pack.level_files.empty()) throw Error("no levels listed");
  });
  attempt("tam/markers.tab", [&](const std::string &text) {
    pack.markers = MarkerTable::Parse(text);
  });
  attempt("tam/transforms.tab", [&](const std::string &text) {
    pack.transforms = TransformTable::Parse(text);
  });
  attempt("tam/verb_markers.tab", [&](const std::string &text) {
    pack.verb_markers = ParseVerbMarkers(text);
  });
  if (!have_types) throw PackError(std::move(violations));

  attempt("lexicon.lex", [&](const std::string &text) {
    pack.lexicon_entries = ParseLexicon(text, pack.registry, pack.tokenizer);
    pack.lexicon = CompiledLexicon::Compile(pack.lexicon_entries);
  });
  for (const auto &file : pack.level_files) {
    attempt(file, [&](const std::string &text) {
      pack.cascade.levels.push_back(
          ParseGrammar(text, pack.registry, fs::path(file).stem().string()));
    });
  }
  if (!violations.empty()) throw PackError(std::move(violations));

  violations = ValidatePack(pack, &pack.warnings);
  if (!violations.empty()) throw PackError(std::move(violations));
  return pack;
}

std::vector<CatalogEntry> RuleCatalog(const GrammarPack &pack) {
  std::vector<CatalogEntry> out;
  for (size_t li = 0; li < pack.cascade.levels.size(); ++li) {
    const GrammarLevel &level = pack.cascade.levels[li];
    for (const auto &rule : level.rules) {
      out.push_back(CatalogEntry{rule.name, level.name, li, rule.output_type});
    }
  }
  return out;
}

}  // namespace tamx
