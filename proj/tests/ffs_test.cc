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


#include <random>

#include "doctest.h"
#include "tamx/error.h"
#include "tamx/ffs.h"

namespace tamx {
namespace {

const char kTypes[] = R"(
gazetteer := [GTYPE,VOLITIONAL,EPISTEMIC,TEMPORAL,SURFACE,
              GNUMBER, AMOUNT, SLOTTYPE, NONUM, CONTEXT,
              NONVIOLENT]
person := [NAME, TYPE, FIRST_NAME, LAST_NAME, INITIAL1, INITIAL2, SEX, POSITION, TITLE, RELIABLE, RULE]
quantity := [NAME,QUANTIFIER,TYPE,AMOUNT,RULE]
)";

ConstraintSet Cs(std::string type,
                 std::vector<std::tuple<std::string, bool, std::string>> cs) {
  ConstraintSet out{std::move(type), {}};
  for (auto &[f, var, text] : cs) {
    out.constraints.push_back({f,
                               var ? FeatureConstraint::Kind::kVariable
                                   : FeatureConstraint::Kind::kLiteral,
                               text});
  }
  return out;
}

TEST_CASE("type declarations parse with continuation lines") {
  TypeRegistry r = TypeRegistry::Parse(kTypes);
  REQUIRE(r.Has("gazetteer"));
  CHECK(r.Get("gazetteer").features.size() == 11);
  CHECK(r.Get("gazetteer").Declares("NONVIOLENT"));
  CHECK(r.Get("person").features.size() == 11);
  CHECK(r.Get("person").IndexOf("RULE") == 10);
}

TEST_CASE("duplicate declarations are rejected") {
  TypeRegistry r = TypeRegistry::Parse(kTypes);
  CHECK_THROWS_AS(r.Declare({"person", {"NAME"}}), SchemaError);
  CHECK_THROWS_AS(r.Declare({"thing", {"A", "A"}}), SchemaError);
  CHECK_THROWS_AS(TypeRegistry::Parse("a := [X]\na := [Y]"), Error);
}

TEST_CASE("MakeFfs validates type and features") {
  TypeRegistry r = TypeRegistry::Parse(kTypes);
  auto f = MakeFfs(r, "gazetteer",
                   {{"GTYPE", "verb"},
                    {"VOLITIONAL", "asserted"},
                    {"EPISTEMIC", "certain"},
                    {"TEMPORAL", "simultaneous"},
                    {"SURFACE", "bulunuyor"}},
                   {0, 1});
  CHECK(f.Value("TEMPORAL") == "simultaneous");
  CHECK_FALSE(f.Has("GNUMBER"));

  auto empty = MakeFfs(r, "gazetteer", {}, {2, 3});
  CHECK(empty.features().empty());

  CHECK_THROWS_AS(MakeFfs(r, "nonexistent_type", {}, {0, 1}), SchemaError);
  CHECK_THROWS_AS(MakeFfs(r, "quantity", {{"GTYPE", "x"}}, {0, 1}),
                  SchemaError);
}

TEST_CASE("constraint matching binds variables") {
  TypeRegistry r = TypeRegistry::Parse(kTypes);
  auto f = MakeFfs(r, "gazetteer",
                   {{"GTYPE", "report_verb"},
                    {"VOLITIONAL", "hearsay"},
                    {"SURFACE", "belirtti"}},
                   {0, 1});
  auto b = Matches(f, Cs("gazetteer", {{"GTYPE", false, "report_verb"},
                                       {"SURFACE", true, "base_form"}}));
  REQUIRE(b);
  CHECK(*b == Bindings{{"base_form", "belirtti"}});
  CHECK_FALSE(Matches(f, Cs("gazetteer", {{"GTYPE", false, "verb"}})));
  CHECK_FALSE(Matches(f, Cs("gazetteer", {{"EPISTEMIC", true, "e"}})));
  CHECK_FALSE(Matches(f, Cs("person", {})));
}

// Every FFS over two features with values from {absent, x, y}, against every
// constraint set over the same alphabet. The oracle spells out the semantics
// case by case.
TEST_CASE("matching agrees with a brute-force oracle on two features") {
  TypeRegistry r;
  r.Declare({"t", {"A", "B"}});
  const std::vector<std::string> vals = {"", "x", "y"};
  // constraint per feature: none, literal x, literal y, variable
  const int kinds = 4;
  int checked = 0;
  for (const auto &a : vals) {
    for (const auto &b : vals) {
      Assignments as;
      if (!a.empty()) as["A"] = a;
      if (!b.empty()) as["B"] = b;
      auto ffs = MakeFfs(r, "t", as, {0, 1});
      for (int ka = 0; ka < kinds; ++ka) {
        for (int kb = 0; kb < kinds; ++kb) {
          ConstraintSet cs{"t", {}};
          bool expect = true;
          Bindings expect_b;
          auto add = [&](const std::string &f, int k, const std::string &v) {
            if (k == 0) return;
            if (k == 3) {
              cs.constraints.push_back(
                  {f, FeatureConstraint::Kind::kVariable, "v" + f});
              if (v.empty()) expect = false;
              expect_b["v" + f] = v;
              return;
            }
            std::string lit = k == 1 ? "x" : "y";
            cs.constraints.push_back({f, FeatureConstraint::Kind::kLiteral, lit});
            if (v != lit) expect = false;
          };
          add("A", ka, a);
          add("B", kb, b);
          auto got = Matches(ffs, cs);
          CHECK(got.has_value() == expect);
          if (got && expect) CHECK(*got == expect_b);
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 9 * 16);
}

TEST_CASE("literal-only matching is subset semantics") {
  TypeRegistry r;
  r.Declare({"t", {"A", "B", "C"}});
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Assignments fa, ca;
    for (const char *f : {"A", "B", "C"}) {
      int v = rng() % 3;
      if (v) fa[f] = std::string(1, char('a' + v));
      int c = rng() % 3;
      if (c) ca[f] = std::string(1, char('a' + c));
    }
    ConstraintSet cs{"t", {}};
    for (auto &[f, v] : ca) {
      cs.constraints.push_back({f, FeatureConstraint::Kind::kLiteral, v});
    }
    bool subset = std::includes(fa.begin(), fa.end(), ca.begin(), ca.end());
    CHECK(Matches(MakeFfs(r, "t", fa, {0, 1}), cs).has_value() == subset);
  }
}

TEST_CASE("a variable already bound must agree") {
  TypeRegistry r;
  r.Declare({"t", {"A"}});
  auto f = MakeFfs(r, "t", {{"A", "x"}}, {0, 1});
  ConstraintSet cs{"t", {{"A", FeatureConstraint::Kind::kVariable, "v"}}};
  CHECK(Matches(f, cs, {{"v", "x"}}));
  CHECK_FALSE(Matches(f, cs, {{"v", "y"}}));
}

}  // namespace
}  // namespace tamx
