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


#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "tamx/error.h"
#include "tamx/tam.h"

namespace tamx {
namespace {

std::string ReadPackFile(const std::string &rel) {
  std::ifstream in(std::string(TAMX_PACK_DIR) + "/" + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every temporal atom the ontology can compose: base, optional _ana, and a
// specification of up to two atoms.
std::vector<std::string> TemporalAtoms() {
  std::vector<std::string> specs = {""};
  std::vector<std::string> singles = TemporalSpecAtoms();
  for (const auto &b : TemporalBases()) singles.push_back(b);
  for (const auto &s : singles) specs.push_back(s);
  for (const auto &b : TemporalBases()) {
    for (const auto &s : TemporalSpecAtoms()) specs.push_back(b + "_" + s);
  }
  std::vector<std::string> out;
  for (const auto &b : TemporalBases()) {
    for (const char *ana : {"", "_ana"}) {
      for (const auto &s : specs) {
        out.push_back(b + ana + (s.empty() ? "" : "_" + s));
      }
    }
  }
  return out;
}

std::vector<std::string> EpistemicAtoms() {
  std::vector<std::string> out = EpistemicBases();
  for (const auto &b : EpistemicBases()) out.push_back("neg_certain_ana_" + b);
  return out;
}

TEST_CASE("the three dimensions") {
  CHECK(TemporalBases().size() == 7);
  CHECK(EpistemicBases().size() == 7);
  CHECK(VolitionalBases().size() == 8);
  CHECK(ParseDimension("temporal") == Dimension::kTemporal);
  CHECK_FALSE(ParseDimension("mood"));
}

TEST_CASE("parse composite categories") {
  auto t = ParseTemporal("anterior_ana_repetitive");
  CHECK(t.base == "anterior");
  CHECK(t.anaphoric);
  CHECK(t.spec == "repetitive");
  auto a = ParseTemporal("anterior");
  CHECK_FALSE(a.anaphoric);
  CHECK(a.spec.empty());
  auto p = ParseTemporal("anterior_ana_perfect_persisting");
  CHECK(p.spec == "perfect_persisting");
  CHECK(ParseTemporal("prospective_imminent").spec == "imminent");
  CHECK(ParseEpistemic("neg_certain_ana_probable").negated_anaphoric);
  CHECK(ParseEpistemic("neg_certain_ana_probable").base == "probable");
  CHECK_THROWS_AS(ParseEpistemic("banana"), TamError);
  CHECK_THROWS_AS(ParseTemporal("later"), TamError);
  CHECK_THROWS_AS(ParseTemporal("anterior_sometimes"), TamError);
  CHECK_THROWS_AS(ParseVolitional("requested"), TamError);
}

TEST_CASE("parse and render are inverse over the full enumeration") {
  size_t n = 0;
  for (const auto &atom : TemporalAtoms()) {
    CHECK(Render(ParseTemporal(atom)) == atom);
    CHECK(IsValidCategory(Dimension::kTemporal, atom));
    ++n;
  }
  for (const auto &atom : EpistemicAtoms()) {
    CHECK(Render(ParseEpistemic(atom)) == atom);
    ++n;
  }
  for (const auto &atom : VolitionalBases()) {
    CHECK(Render(ParseVolitional(atom)) == atom);
    ++n;
  }
  CHECK(n > 500);
}

TEST_CASE("tempspec rendering") {
  TempSpec s{"repetitive", "zaman zaman"};
  CHECK(RenderTempSpec(s) == "repetitive \\ zaman zaman \\");
  CHECK(ParseTempSpec(RenderTempSpec(s)) == s);
  CHECK_FALSE(ParseTempSpec("repetitive"));
}

TransformTable Transforms() { return TransformTable::Parse(ReadPackFile("tam/transforms.tab")); }

TEST_CASE("adverb examples") {
  auto tt = Transforms();
  auto r1 = ApplyAdverb(MakeTamClass("asserted", "certain", "anterior"),
                        {Dimension::kTemporal, "repetitive", "zaman zaman"}, tt);
  CHECK(r1.effect == AdverbEffect::kTransform);
  CHECK(r1.transform == "anaphoric_temp_adv_1");
  CHECK(Render(*r1.tam.temporal) == "anterior_ana_repetitive");
  CHECK(r1.tam.tempspec == TempSpec{"repetitive", "zaman zaman"});

  for (const char *temp : {"posterior", "prospective"}) {
    auto r = ApplyAdverb(MakeTamClass("asserted", "general_fact", temp),
                         {Dimension::kTemporal, "atemporal", "hiçbir zaman"}, tt);
    CHECK(r.transform == "atemporal_to_prospective_1");
    CHECK(Render(*r.tam.temporal) == "prospective");
    CHECK(r.tam.tempspec == TempSpec{"atemporal", "hiçbir zaman"});
  }

  auto r3 = ApplyAdverb(MakeTamClass("asserted", "certain", "posterior"),
                        {Dimension::kEpistemic, "probable", "belki de"}, tt);
  CHECK(r3.effect == AdverbEffect::kOverride);
  CHECK(r3.tam == MakeTamClass("asserted", "probable", "posterior"));

  auto r4 = ApplyAdverb(MakeTamClass("asserted", "certain", "anterior"),
                        {Dimension::kTemporal, "anterior", "saat beşte"}, tt);
  CHECK(r4.effect == AdverbEffect::kSpecification);
  CHECK(Render(*r4.tam.temporal) == "anterior");
  CHECK(r4.tam.tempspec == TempSpec{"anterior", "saat beşte"});
}

// Optional values of one dimension: absent, then every atom.
template <typename T, typename F>
std::vector<std::optional<T>> WithAbsent(const std::vector<std::string> &atoms, F parse) {
  std::vector<std::optional<T>> out = {std::nullopt};
  for (const auto &a : atoms) out.push_back(parse(a));
  return out;
}

TEST_CASE("adverbs only touch their own dimension") {
  auto tt = Transforms();
  auto temps = WithAbsent<TemporalCategory>(TemporalAtoms(), ParseTemporal);
  auto epis = WithAbsent<EpistemicCategory>(EpistemicAtoms(), ParseEpistemic);
  auto vols = WithAbsent<VolitionalCategory>(VolitionalBases(), ParseVolitional);
  std::vector<std::optional<TempSpec>> specs = {std::nullopt, TempSpec{"occ", "bir kez"}};
  size_t checked = 0, violations = 0;

  auto check = [&](const TamClass &verb, const Adverb &adv) {
    auto r = ApplyAdverb(verb, adv, tt);
    const TamClass &o = r.tam;
    bool ok = true;
    if (adv.dimension != Dimension::kVolitional) ok = ok && o.volitional == verb.volitional;
    if (adv.dimension != Dimension::kEpistemic) ok = ok && o.epistemic == verb.epistemic;
    if (adv.dimension != Dimension::kTemporal) {
      ok = ok && o.temporal == verb.temporal && o.tempspec == verb.tempspec;
    } else {
      ok = ok && o.tempspec == TempSpec{adv.value, adv.surface};
    }
    // Resolution order, restated.
    std::optional<std::string> own;
    std::string base;
    switch (adv.dimension) {
      case Dimension::kTemporal:
        if (verb.temporal) own = Render(*verb.temporal), base = verb.temporal->base;
        break;
      case Dimension::kEpistemic:
        if (verb.epistemic) own = Render(*verb.epistemic), base = verb.epistemic->base;
        break;
      case Dimension::kVolitional:
        if (verb.volitional) own = Render(*verb.volitional), base = verb.volitional->base;
        break;
    }
    std::optional<std::string> now;
    switch (adv.dimension) {
      case Dimension::kTemporal:
        if (o.temporal) now = Render(*o.temporal);
        break;
      case Dimension::kEpistemic:
        if (o.epistemic) now = Render(*o.epistemic);
        break;
      case Dimension::kVolitional:
        if (o.volitional) now = Render(*o.volitional);
        break;
    }
    const TemporalTransform *rule = nullptr;
    if (adv.dimension == Dimension::kTemporal && verb.temporal) {
      for (const auto &t : tt.rules()) {
        bool v = std::find(t.adverb_values.begin(), t.adverb_values.end(), adv.value) !=
                 t.adverb_values.end();
        bool b = std::find(t.verb_bases.begin(), t.verb_bases.end(), base) !=
                 t.verb_bases.end();
        if (v && b) {
          rule = &t;
          break;
        }
      }
    }
    if (rule != nullptr) {
      ok = ok && r.effect == AdverbEffect::kTransform && r.transform == rule->name;
      if (rule->result == "anaphoric") {
        TemporalCategory want = *verb.temporal;
        want.anaphoric = true;
        want.spec = adv.value;
        ok = ok && o.temporal == want;
      } else {
        ok = ok && now == rule->result;
      }
    } else if (!IsValidCategory(adv.dimension, adv.value)) {
      ok = ok && now == own && r.effect == AdverbEffect::kSpecification;
    } else {
      std::string adv_base = adv.dimension == Dimension::kTemporal
                                 ? ParseTemporal(adv.value).base
                             : adv.dimension == Dimension::kEpistemic
                                 ? ParseEpistemic(adv.value).base
                                 : ParseVolitional(adv.value).base;
      if (!own || base != adv_base) {
        ok = ok && r.effect == AdverbEffect::kOverride && now == adv.value;
      } else {
        ok = ok && r.effect == AdverbEffect::kSpecification && now == own;
        // idempotent
        ok = ok && ApplyAdverb(o, adv, tt).tam == o;
      }
    }
    ++checked;
    if (!ok) ++violations;
  };

  std::vector<std::string> temporal_adverbs = TemporalAtoms();
  for (const auto &s : TemporalSpecAtoms()) temporal_adverbs.push_back(s);
  for (const auto &t : temps) {
    for (const auto &v : {vols[0], vols[4]}) {
      for (const auto &e : {epis[0], epis[2]}) {
        for (const auto &sp : specs) {
          for (const auto &a : temporal_adverbs) {
            check(TamClass{v, e, t, sp}, {Dimension::kTemporal, a, "x"});
          }
        }
      }
    }
  }
  for (const auto &e : epis) {
    for (const auto &t : {temps[0], temps[3]}) {
      for (const auto &v : {vols[0], vols[4]}) {
        for (const auto &a : EpistemicAtoms()) {
          check(TamClass{v, e, t, specs[1]}, {Dimension::kEpistemic, a, "y"});
        }
      }
    }
  }
  for (const auto &v : vols) {
    for (const auto &t : {temps[0], temps[3]}) {
      for (const auto &e : {epis[0], epis[2]}) {
        for (const auto &a : VolitionalBases()) {
          check(TamClass{v, e, t, specs[0]}, {Dimension::kVolitional, a, "z"});
        }
      }
    }
  }
  CHECK(violations == 0);
  CHECK(checked > 100000);
}

TEST_CASE("subordination is a left-biased merge") {
  TamClass full = MakeTamClass("hearsay", "inferred", "perfect");
  full.tempspec = TempSpec{"occ", "bir kez"};
  TamClass other = MakeTamClass("asserted", "certain", "anterior_ana_occ");
  other.tempspec = TempSpec{"repetitive", "zaman zaman"};
  size_t violations = 0, checked = 0;
  for (int mm = 0; mm < 16; ++mm) {
    for (int sm = 0; sm < 16; ++sm) {
      TamClass m, s;
      if (mm & 1) m.volitional = full.volitional;
      if (mm & 2) m.epistemic = full.epistemic;
      if (mm & 4) m.temporal = full.temporal;
      if (mm & 8) m.tempspec = full.tempspec;
      if (sm & 1) s.volitional = other.volitional;
      if (sm & 2) s.epistemic = other.epistemic;
      if (sm & 4) s.temporal = other.temporal;
      if (sm & 8) s.tempspec = other.tempspec;
      TamClass got = MergeLeft(m, s);
      bool ok = got.volitional == (m.volitional ? m.volitional : s.volitional) &&
                got.epistemic == (m.epistemic ? m.epistemic : s.epistemic) &&
                got.temporal == (m.temporal ? m.temporal : s.temporal) &&
                got.tempspec == (m.tempspec ? m.tempspec : s.tempspec);
      for (MatrixKind kind : {MatrixKind::kReport, MatrixKind::kEvidential,
                              MatrixKind::kPossibility}) {
        if (!s.temporal) {
          try {
            CombineSubordination(m, kind, s);
            ok = false;
          } catch (const TamError &) {
          }
        } else {
          ok = ok && CombineSubordination(m, kind, s) == got;
        }
      }
      ++checked;
      if (!ok) ++violations;
    }
  }
  CHECK(checked == 256);
  CHECK(violations == 0);

  auto five = CombineSubordination(MakeTamClass("hearsay", "", ""), MatrixKind::kReport,
                                   MakeTamClass("", "", "anterior_ana_occ"));
  CHECK(RenderTriple(five) == "hearsay + - + anterior_ana_occ");
  auto two = CombineSubordination(MakeTamClass("asserted", "inferred", ""),
                                  MatrixKind::kEvidential, MakeTamClass("", "", "perfect"));
  CHECK(two == MakeTamClass("asserted", "inferred", "perfect"));
  auto four = CombineSubordination(MakeTamClass("asserted", "conjectured", ""),
                                   MatrixKind::kEvidential,
                                   MakeTamClass("", "", "prospective"));
  CHECK(four == MakeTamClass("asserted", "conjectured", "prospective"));
}

TEST_CASE("marker tables") {
  auto m = MarkerTable::Parse(ReadPackFile("tam/markers.tab"));
  CHECK(m.patterns().size() == 17);
  auto set = [&](const char *p) {
    std::set<std::string> out;
    for (const auto &c : m.Classes(p)) out.insert(RenderTriple(c));
    return out;
  };
  CHECK(set("V-Xr") == std::set<std::string>{
                           "asserted + general_fact + atemporal",
                           "asserted + general_fact + perfect_persisting",
                           "asserted + probable + posterior",
                           "asserted + probable + prospective"});
  CHECK(set("V-DI") == std::set<std::string>{"asserted + certain + anterior",
                                             "asserted + certain + perfect",
                                             "asserted + certain + anterior_ana_occ"});
  CHECK(set("V-mIş-DIr") == std::set<std::string>{"general_statement + certain + anterior",
                                                  "general_statement + certain + perfect"});
  CHECK(set("V-Iyor").size() == 6);
  CHECK(set("P-DIr") == std::set<std::string>{"asserted + general_fact + atemporal",
                                              "general_statement + certain + simultaneous",
                                              "general_statement + certain + perfect_persisting"});
  CHECK(set("P-Dir") == set("P-DIr"));
  CHECK_THROWS_AS(m.Classes("V-Xyz"), TamError);
  CHECK(m.Allows("V-DI", MakeTamClass("asserted", "certain", "perfect")));
  CHECK_FALSE(m.Allows("V-DI", MakeTamClass("asserted", "certain", "posterior")));
  CHECK_THROWS(MarkerTable::Parse("V-X | asserted + certain"));
}

TEST_CASE("transform table format") {
  auto tt = TransformTable::Parse("t1 | occ imminent | anterior | anaphoric\n");
  REQUIRE(tt.rules().size() == 1);
  CHECK(tt.rules()[0].adverb_values == std::vector<std::string>{"occ", "imminent"});
  CHECK(tt.Find("occ", ParseTemporal("anterior_ana_occ")) != nullptr);
  CHECK(tt.Find("repetitive", ParseTemporal("anterior")) == nullptr);
  CHECK(tt.Find("occ", ParseTemporal("posterior")) == nullptr);
  CHECK_THROWS_AS(TransformTable::Parse("t1 | occ | anterior | later\n"), ParseError);
  CHECK_THROWS_AS(TransformTable::Parse("t1 | banana | anterior | anaphoric\n"), ParseError);
}

}  // namespace
}  // namespace tamx
