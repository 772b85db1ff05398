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

#include "tamx/render.h"

#include <json.hpp>

#include "tamx/error.h"
#include "tamx/strings.h"
#include "tamx/tam.h"

namespace tamx {

using ojson = nlohmann::ordered_json;

namespace {

bool IsCategoryFeature(std::string_view feature) {
  return feature == "VOLITIONAL" || feature == "EPISTEMIC" ||
         feature == "TEMPORAL";
}

ojson StringOrNull(const std::string &s) {
  return s.empty() ? ojson(nullptr) : ojson(s);
}

std::string StringOrEmpty(const ojson &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null()) return "";
  return j.at(key).get<std::string>();
}

}  // namespace

std::string RenderBlock(const FlatFeatureStructure &ffs,
                        const TypeRegistry &registry) {
  std::string out = ffs.type() + "\n";
  for (const auto &feature : registry.Get(ffs.type()).features) {
    const std::string *value = ffs.Get(feature);
    if (IsCategoryFeature(feature)) {
      out += feature + " : " + (value ? *value + " " : std::string()) + "()\n";
    } else if (value != nullptr) {
      out += feature + " : " + *value + "\n";
    }
  }
  return out;
}

std::string RenderBlocks(const std::vector<SentenceAnalysis> &analyses,
                         const TypeRegistry &registry) {
  std::string out;
  for (size_t i = 0; i < analyses.size(); ++i) {
    if (i > 0) out += "\n";
    out += "# " + analyses[i].sentence + "\n";
    out += RenderBlock(analyses[i].ffs, registry);
  }
  return out;
}

std::vector<std::string> SplitSlot(std::string_view value) {
  std::vector<std::string> out;
  for (auto &part : Split(value, '-')) {
    std::string t = Trim(part);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

AnalysisRecord ToRecord(const SentenceAnalysis &analysis) {
  const FlatFeatureStructure &f = analysis.ffs;
  auto get = [&](const char *feature) { return f.Value(feature).value_or(""); };
  AnalysisRecord r;
  r.doc = analysis.provenance.document;
  r.line = analysis.provenance.line;
  r.sentence = analysis.provenance.sentence;
  r.begin = analysis.provenance.char_span.begin;
  r.end = analysis.provenance.char_span.end;
  r.rule = get("RULE");
  r.surface = get("SURFACE");
  r.tam = MakeTamClass(get("VOLITIONAL"), get("EPISTEMIC"), get("TEMPORAL"));
  r.tam.tempspec = ParseTempSpec(get("TEMPSPEC"));
  r.verb = get("VERB");
  r.people = SplitSlot(get("PEOPLE"));
  r.disaster = get("DISASTER");
  r.needs = SplitSlot(get("HUMANITARIAN_NEED"));
  return r;
}

std::string RenderJson(const std::vector<AnalysisRecord> &records) {
  ojson array = ojson::array();
  for (const auto &r : records) {
    ojson o;
    o["doc"] = r.doc;
    o["line"] = r.line;
    o["sentence"] = r.sentence;
    o["span"] = ojson::array({r.begin, r.end});
    o["rule"] = StringOrNull(r.rule);
    o["surface"] = StringOrNull(r.surface);
    ojson tam;
    tam["volitional"] =
        r.tam.volitional ? ojson(r.tam.volitional->base) : ojson(nullptr);
    if (r.tam.epistemic) {
      tam["epistemic"] = {{"base", r.tam.epistemic->base},
                          {"negated_anaphoric", r.tam.epistemic->negated_anaphoric}};
    } else {
      tam["epistemic"] = nullptr;
    }
    if (r.tam.temporal) {
      tam["temporal"] = {{"base", r.tam.temporal->base},
                         {"anaphoric", r.tam.temporal->anaphoric},
                         {"spec", StringOrNull(r.tam.temporal->spec)}};
    } else {
      tam["temporal"] = nullptr;
    }
    o["tam"] = tam;
    if (r.tam.tempspec) {
      o["tempspec"] = {{"value", r.tam.tempspec->value},
                       {"surface", r.tam.tempspec->surface}};
    } else {
      o["tempspec"] = nullptr;
    }
    o["verb"] = StringOrNull(r.verb);
    o["people"] = r.people;
    o["disaster"] = StringOrNull(r.disaster);
    o["needs"] = r.needs;
    array.push_back(std::move(o));
  }
  return array.dump(2) + "\n";
}

std::string RenderJson(const std::vector<SentenceAnalysis> &analyses) {
  std::vector<AnalysisRecord> records;
  records.reserve(analyses.size());
  for (const auto &a : analyses) records.push_back(ToRecord(a));
  return RenderJson(records);
}

std::vector<AnalysisRecord> ParseJson(std::string_view text) {
  std::vector<AnalysisRecord> out;
  try {
    ojson array = ojson::parse(text);
    if (!array.is_array()) throw ParseError("expected a JSON array", 1);
    for (const auto &o : array) {
      AnalysisRecord r;
      r.doc = o.at("doc").get<std::string>();
      r.line = o.at("line").get<size_t>();
      r.sentence = o.at("sentence").get<size_t>();
      r.begin = o.at("span").at(0).get<size_t>();
      r.end = o.at("span").at(1).get<size_t>();
      r.rule = StringOrEmpty(o, "rule");
      r.surface = StringOrEmpty(o, "surface");
      const ojson &tam = o.at("tam");
      if (!tam.at("volitional").is_null()) {
        r.tam.volitional = ParseVolitional(tam.at("volitional").get<std::string>());
      }
      if (!tam.at("epistemic").is_null()) {
        r.tam.epistemic = EpistemicCategory{
            tam.at("epistemic").at("base").get<std::string>(),
            tam.at("epistemic").at("negated_anaphoric").get<bool>()};
      }
      if (!tam.at("temporal").is_null()) {
        const ojson &t = tam.at("temporal");
        r.tam.temporal = TemporalCategory{t.at("base").get<std::string>(),
                                          t.at("anaphoric").get<bool>(),
                                          StringOrEmpty(t, "spec")};
      }
      if (!o.at("tempspec").is_null()) {
        r.tam.tempspec = TempSpec{o.at("tempspec").at("value").get<std::string>(),
                                  o.at("tempspec").at("surface").get<std::string>()};
      }
      r.verb = StringOrEmpty(o, "verb");
      r.people = o.at("people").get<std::vector<std::string>>();
      r.disaster = StringOrEmpty(o, "disaster");
      r.needs = o.at("needs").get<std::vector<std::string>>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed analysis JSON: ") + e.what(), 0);
  }
  return out;
}

FilterExpr ParseFilter(std::string_view text) {
  size_t eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError("filter '" + std::string(text) + "' must be dimension=value",
                     0);
  }
  FilterExpr f{Trim(text.substr(0, eq)), Trim(text.substr(eq + 1))};
  if (f.value.empty()) throw ParseError("filter value is empty", 0);
  if (auto dim = ParseDimension(f.dimension)) {
    f.value = CanonicalCategory(*dim, f.value);
  } else if (f.dimension == "disaster_type") {
    if (f.value != "MMD" && f.value != "ND" && f.value != "DO") {
      throw ParseError("disaster_type must be MMD, ND or DO", 0);
    }
  } else if (f.dimension != "rule") {
    throw ParseError("unknown filter dimension '" + f.dimension + "'", 0);
  }
  return f;
}

bool FilterMatches(const SentenceAnalysis &analysis, const FilterExpr &expr) {
  auto value = [&](const char *feature) {
    return analysis.ffs.Value(feature).value_or("");
  };
  if (expr.dimension == "volitional") return value("VOLITIONAL") == expr.value;
  if (expr.dimension == "epistemic") return value("EPISTEMIC") == expr.value;
  if (expr.dimension == "rule") return value("RULE") == expr.value;
  if (expr.dimension == "disaster_type") {
    return analysis.disaster_type == expr.value;
  }
  if (expr.dimension == "temporal") {
    std::string actual = value("TEMPORAL");
    if (actual.empty() || !IsValidCategory(Dimension::kTemporal, actual)) {
      return false;
    }
    TemporalCategory query = ParseTemporal(expr.value);
    TemporalCategory got = ParseTemporal(actual);
    if (!query.anaphoric && query.spec.empty()) return got.base == query.base;
    return got == query;
  }
  return false;
}

std::vector<SentenceAnalysis> FilterAnalyses(
    const std::vector<SentenceAnalysis> &analyses,
    const std::vector<FilterExpr> &filters) {
  std::vector<SentenceAnalysis> out;
  for (const auto &a : analyses) {
    bool keep = true;
    for (const auto &f : filters) keep = keep && FilterMatches(a, f);
    if (keep) out.push_back(a);
  }
  return out;
}

}  // namespace tamx
