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

#include "tamx/tam.h"

#include <algorithm>
#include <cctype>

#include "tamx/error.h"
#include "tamx/strings.h"
#include "tamx/unicode.h"

namespace tamx {

namespace {

bool Contains(const std::vector<std::string> &set, std::string_view atom) {
  return std::find(set.begin(), set.end(), atom) != set.end();
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

constexpr std::string_view kNegCertainAna = "neg_certain_ana_";

}  // namespace

std::string_view DimensionName(Dimension dimension) {
  switch (dimension) {
    case Dimension::kVolitional: return "volitional";
    case Dimension::kEpistemic: return "epistemic";
    case Dimension::kTemporal: return "temporal";
  }
  return "temporal";
}

std::optional<Dimension> ParseDimension(std::string_view name) {
  if (name == "volitional") return Dimension::kVolitional;
  if (name == "epistemic") return Dimension::kEpistemic;
  if (name == "temporal") return Dimension::kTemporal;
  return std::nullopt;
}

const std::vector<std::string> &TemporalBases() {
  static const std::vector<std::string> kBases = {
      "simultaneous", "anterior",  "posterior", "perfect",
      "prospective",  "recurrent", "atemporal"};
  return kBases;
}

const std::vector<std::string> &EpistemicBases() {
  static const std::vector<std::string> kBases = {
      "new_information", "certain",  "hypothetical", "inferred",
      "conjectured",     "probable", "general_fact"};
  return kBases;
}

const std::vector<std::string> &VolitionalBases() {
  static const std::vector<std::string> kBases = {
      "immediate_contribution", "accepted",   "envisioned",
      "asserted",               "wanted",     "acceptable",
      "general_statement",      "hearsay"};
  return kBases;
}

const std::vector<std::string> &TemporalSpecAtoms() {
  static const std::vector<std::string> kAtoms = {"occ", "repetitive",
                                                  "persisting", "imminent"};
  return kAtoms;
}

TemporalCategory ParseTemporal(std::string_view atom) {
  std::string_view best;
  for (const auto &base : TemporalBases()) {
    if (base.size() <= best.size()) continue;
    if (atom == base || StartsWith(atom, base + "_")) best = base;
  }
  if (best.empty()) {
    throw TamError("unknown temporal category '" + std::string(atom) + "'");
  }
  TemporalCategory c;
  c.base = std::string(best);
  std::string_view rest = atom.substr(best.size());
  if (!rest.empty()) rest.remove_prefix(1);
  if (rest == "ana") {
    c.anaphoric = true;
    rest = {};
  } else if (StartsWith(rest, "ana_")) {
    c.anaphoric = true;
    rest.remove_prefix(4);
  }
  if (!rest.empty()) {
    for (const auto &part : Split(rest, '_')) {
      if (!Contains(TemporalSpecAtoms(), part) &&
          !Contains(TemporalBases(), part)) {
        throw TamError("unknown temporal specification '" + part + "' in '" +
                       std::string(atom) + "'");
      }
    }
    c.spec = std::string(rest);
  }
  return c;
}

EpistemicCategory ParseEpistemic(std::string_view atom) {
  EpistemicCategory c;
  std::string_view base = atom;
  if (StartsWith(atom, kNegCertainAna)) {
    c.negated_anaphoric = true;
    base.remove_prefix(kNegCertainAna.size());
  }
  if (!Contains(EpistemicBases(), base)) {
    throw TamError("unknown epistemic category '" + std::string(atom) + "'");
  }
  c.base = std::string(base);
  return c;
}

VolitionalCategory ParseVolitional(std::string_view atom) {
  if (!Contains(VolitionalBases(), atom)) {
    throw TamError("unknown volitional category '" + std::string(atom) + "'");
  }
  return VolitionalCategory{std::string(atom)};
}

std::string Render(const TemporalCategory &c) {
  std::string out = c.base;
  if (c.anaphoric) out += "_ana";
  if (!c.spec.empty()) out += "_" + c.spec;
  return out;
}

std::string Render(const EpistemicCategory &c) {
  return c.negated_anaphoric ? std::string(kNegCertainAna) + c.base : c.base;
}

std::string Render(const VolitionalCategory &c) { return c.base; }

std::string CanonicalCategory(Dimension dimension, std::string_view atom) {
  switch (dimension) {
    case Dimension::kVolitional: return Render(ParseVolitional(atom));
    case Dimension::kEpistemic: return Render(ParseEpistemic(atom));
    case Dimension::kTemporal: return Render(ParseTemporal(atom));
  }
  return std::string(atom);
}

bool IsValidCategory(Dimension dimension, std::string_view atom) {
  try {
    CanonicalCategory(dimension, atom);
    return true;
  } catch (const TamError &) {
    return false;
  }
}

std::string RenderTempSpec(const TempSpec &spec) {
  return spec.value + " \\ " + spec.surface + " \\";
}

std::optional<TempSpec> ParseTempSpec(std::string_view text) {
  std::string t = Trim(text);
  size_t sep = t.find(" \\ ");
  if (sep == std::string::npos || t.size() < sep + 4 || t.back() != '\\') {
    return std::nullopt;
  }
  TempSpec spec;
  spec.value = Trim(std::string_view(t).substr(0, sep));
  spec.surface = Trim(std::string_view(t).substr(sep + 3, t.size() - sep - 4));
  if (spec.value.empty()) return std::nullopt;
  return spec;
}

TamClass MakeTamClass(std::string_view volitional, std::string_view epistemic,
                      std::string_view temporal) {
  TamClass tam;
  if (!volitional.empty()) tam.volitional = ParseVolitional(volitional);
  if (!epistemic.empty()) tam.epistemic = ParseEpistemic(epistemic);
  if (!temporal.empty()) tam.temporal = ParseTemporal(temporal);
  return tam;
}

std::string RenderTriple(const TamClass &tam) {
  return (tam.volitional ? Render(*tam.volitional) : "-") + " + " +
         (tam.epistemic ? Render(*tam.epistemic) : "-") + " + " +
         (tam.temporal ? Render(*tam.temporal) : "-");
}

TransformTable::TransformTable(std::vector<TemporalTransform> rules)
    : rules_(std::move(rules)) {}

TransformTable TransformTable::Parse(std::string_view text) {
  std::vector<TemporalTransform> rules;
  int line_no = 0;
  for (const auto &raw : Lines(text)) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = Split(line, '|');
    if (fields.size() != 4) {
      throw ParseError("expected 'name | adverb values | verb bases | result'",
                       line_no);
    }
    TemporalTransform t;
    t.name = Trim(fields[0]);
    t.adverb_values = SplitWhitespace(fields[1]);
    t.verb_bases = SplitWhitespace(fields[2]);
    t.result = Trim(fields[3]);
    if (t.name.empty() || t.adverb_values.empty() || t.verb_bases.empty() ||
        t.result.empty()) {
      throw ParseError("empty field in transform '" + t.name + "'", line_no);
    }
    for (const auto &base : t.verb_bases) {
      if (!Contains(TemporalBases(), base)) {
        throw ParseError("unknown temporal base '" + base + "'", line_no);
      }
    }
    for (const auto &value : t.adverb_values) {
      if (!Contains(TemporalSpecAtoms(), value) &&
          !IsValidCategory(Dimension::kTemporal, value)) {
        throw ParseError("unknown adverb value '" + value + "'", line_no);
      }
    }
    if (t.result != "anaphoric" &&
        !IsValidCategory(Dimension::kTemporal, t.result)) {
      throw ParseError("unknown result '" + t.result + "'", line_no);
    }
    rules.push_back(std::move(t));
  }
  return TransformTable(std::move(rules));
}

const TemporalTransform *TransformTable::Find(
    std::string_view adverb_value, const TemporalCategory &verb) const {
  for (const auto &rule : rules_) {
    if (Contains(rule.adverb_values, adverb_value) &&
        Contains(rule.verb_bases, verb.base)) {
      return &rule;
    }
  }
  return nullptr;
}

AdverbResult ApplyAdverb(const TamClass &verb, const Adverb &adverb,
                         const TransformTable &transforms) {
  AdverbResult r;
  r.tam = verb;
  switch (adverb.dimension) {
    case Dimension::kTemporal: {
      r.tam.tempspec = TempSpec{adverb.value, adverb.surface};
      const TemporalTransform *t =
          verb.temporal ? transforms.Find(adverb.value, *verb.temporal)
                        : nullptr;
      if (t != nullptr) {
        r.effect = AdverbEffect::kTransform;
        r.transform = t->name;
        if (t->result == "anaphoric") {
          r.tam.temporal->anaphoric = true;
          r.tam.temporal->spec = adverb.value;
        } else {
          r.tam.temporal = ParseTemporal(t->result);
        }
        return r;
      }
      if (!IsValidCategory(Dimension::kTemporal, adverb.value)) {
        return r;  // a bare specification atom
      }
      TemporalCategory c = ParseTemporal(adverb.value);
      if (!verb.temporal || verb.temporal->base != c.base) {
        r.effect = AdverbEffect::kOverride;
        r.tam.temporal = c;
      }
      return r;
    }
    case Dimension::kEpistemic: {
      EpistemicCategory c = ParseEpistemic(adverb.value);
      if (!verb.epistemic || verb.epistemic->base != c.base) {
        r.effect = AdverbEffect::kOverride;
        r.tam.epistemic = c;
      }
      return r;
    }
    case Dimension::kVolitional: {
      VolitionalCategory c = ParseVolitional(adverb.value);
      if (!verb.volitional || verb.volitional->base != c.base) {
        r.effect = AdverbEffect::kOverride;
        r.tam.volitional = c;
      }
      return r;
    }
  }
  return r;
}

TamClass MergeLeft(const TamClass &matrix, const TamClass &subordinate) {
  TamClass out;
  out.volitional = matrix.volitional ? matrix.volitional : subordinate.volitional;
  out.epistemic = matrix.epistemic ? matrix.epistemic : subordinate.epistemic;
  out.temporal = matrix.temporal ? matrix.temporal : subordinate.temporal;
  out.tempspec = matrix.tempspec ? matrix.tempspec : subordinate.tempspec;
  return out;
}

TamClass CombineSubordination(const TamClass &matrix, MatrixKind,
                              const TamClass &subordinate) {
  if (!subordinate.temporal) {
    throw TamError("subordinate verb carries no temporal category");
  }
  return MergeLeft(matrix, subordinate);
}

std::string MarkerTable::NormalizeName(std::string_view pattern) {
  std::u32string out;
  for (char32_t c : unicode::Decode(Trim(pattern))) {
    if (c == U'i' || c == U'ı' || c == U'İ') {
      c = U'I';
    } else if (c < 0x80) {
      c = static_cast<char32_t>(std::toupper(static_cast<int>(c)));
    } else {
      c = unicode::ToUpper(c);
    }
    out += c;
  }
  return unicode::Encode(out);
}

MarkerTable MarkerTable::Parse(std::string_view text) {
  MarkerTable table;
  int line_no = 0;
  for (const auto &raw : Lines(text)) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = Split(line, '|');
    if (fields.size() != 2) {
      throw ParseError("expected 'pattern | vol + epi + temp'", line_no);
    }
    std::string name = Trim(fields[0]);
    std::vector<std::string> dims = Split(fields[1], '+');
    if (name.empty() || dims.size() != 3) {
      throw ParseError("expected 'pattern | vol + epi + temp'", line_no);
    }
    TamClass tam;
    try {
      tam = MakeTamClass(Trim(dims[0]), Trim(dims[1]), Trim(dims[2]));
    } catch (const TamError &e) {
      throw ParseError(e.what(), line_no);
    }
    if (!tam.volitional || !tam.epistemic || !tam.temporal) {
      throw ParseError("marker classes need all three dimensions", line_no);
    }
    std::string key = NormalizeName(name);
    auto it = std::find_if(
        table.patterns_.begin(), table.patterns_.end(),
        [&](const MarkerPattern &p) { return NormalizeName(p.name) == key; });
    if (it == table.patterns_.end()) {
      table.patterns_.push_back(MarkerPattern{name, {}});
      it = table.patterns_.end() - 1;
    }
    if (std::find(it->classes.begin(), it->classes.end(), tam) !=
        it->classes.end()) {
      throw ParseError("duplicate class for " + name, line_no);
    }
    it->classes.push_back(std::move(tam));
  }
  return table;
}

bool MarkerTable::Has(std::string_view pattern) const {
  std::string key = NormalizeName(pattern);
  for (const auto &p : patterns_) {
    if (NormalizeName(p.name) == key) return true;
  }
  return false;
}

const std::vector<TamClass> &MarkerTable::Classes(
    std::string_view pattern) const {
  std::string key = NormalizeName(pattern);
  for (const auto &p : patterns_) {
    if (NormalizeName(p.name) == key) return p.classes;
  }
  throw TamError("unknown marker pattern '" + std::string(pattern) + "'");
}

bool MarkerTable::Allows(std::string_view pattern, const TamClass &tam) const {
  TamClass triple = tam;
  triple.tempspec.reset();
  const auto &classes = Classes(pattern);
  return std::find(classes.begin(), classes.end(), triple) != classes.end();
}

}  // namespace tamx
