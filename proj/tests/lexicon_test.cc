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


#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "tamx/error.h"
#include "tamx/lexicon.h"
#include "tamx/strings.h"

namespace tamx {
namespace {

std::string ReadFile(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TypeRegistry PackTypes() {
  return TypeRegistry::Parse(ReadFile(std::string(TAMX_PACK_DIR) + "/types.decl"));
}

TEST_CASE("parse lexicon lines") {
  TypeRegistry r = PackTypes();
  auto e = ParseLexicon("belki | GTYPE:adverb_e | EPISTEMIC:probable | SURFACE:belki", r);
  REQUIRE(e.size() == 1);
  CHECK(e[0].key == std::vector<std::string>{"belki"});
  CHECK(e[0].assignments.size() == 3);

  auto v = ParseLexicon(
      "ihtiyaç var | GTYPE:request_verb | VOLITIONAL:asserted | EPISTEMIC: "
      "new_information | TEMPORAL:simultaneous | SURFACE:ihtiyaç var",
      r);
  REQUIRE(v.size() == 1);
  CHECK(v[0].key == std::vector<std::string>{"ihtiyaç", "var"});
  CHECK(v[0].assignments.at("EPISTEMIC") == "new_information");

  auto t = ParseLexicon("prof. dr. | GTYPE:gaz_title | SURFACE:prof. dr.", r);
  CHECK(t[0].key == std::vector<std::string>{"prof", ".", "dr", "."});
}

TEST_CASE("malformed lexicon lines report their line") {
  TypeRegistry r = PackTypes();
  try {
    ParseLexicon("# comment\n\nbadline\n", r);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(ParseLexicon("x | GTYPE", r), ParseError);
  CHECK_THROWS_AS(ParseLexicon("x | COLOR:red", r), ParseError);
}

TEST_CASE("duplicate keys accumulate in file order") {
  TypeRegistry r = PackTypes();
  auto lex = CompiledLexicon::Compile(ParseLexicon(
      "meydana geldi | GTYPE:incidence_verb | TEMPORAL:anterior_ana_occ\n"
      "meydana geldi | GTYPE:incidence_verb | TEMPORAL:atemporal\n",
      r));
  const auto &hits = lex.Lookup({"meydana", "geldi"});
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].at("TEMPORAL") == "anterior_ana_occ");
  CHECK(hits[1].at("TEMPORAL") == "atemporal");
  CHECK(lex.Lookup({"meydana"}).empty());

  auto empty = CompiledLexicon::Compile({});
  CHECK(empty.Lookup({"x"}).empty());
}

TEST_CASE("every seed lexicon line round-trips through compile and lookup") {
  TypeRegistry r = PackTypes();
  Tokenizer tk;
  std::string text = ReadFile(std::string(TAMX_PACK_DIR) + "/lexicon.lex");
  auto entries = ParseLexicon(text, r, tk);
  auto lex = CompiledLexicon::Compile(entries);
  auto reloaded = CompiledLexicon::Deserialize(lex.Serialize());
  size_t lines = 0;
  for (const auto &raw : Lines(text)) {
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    ++lines;
    auto one = ParseLexicon(line, r, tk);
    REQUIRE(one.size() == 1);
    for (const auto *l : {&lex, &reloaded}) {
      const auto &hits = l->Lookup(one[0].key);
      CHECK(std::find(hits.begin(), hits.end(), one[0].assignments) !=
            hits.end());
    }
  }
  CHECK(lines == entries.size());
}

TEST_CASE("longest match agrees with a linear scan over synthetic entries") {
  std::mt19937 rng(2026);
  const std::vector<std::string> words = {"a", "b", "c", "d", "e", "f", "g",
                                          "h", "i", "j", "k", "l"};
  std::vector<LexiconEntry> entries;
  for (int i = 0; i < 10000; ++i) {
    LexiconEntry e;
    size_t len = 1 + rng() % 4;
    for (size_t j = 0; j < len; ++j) e.key.push_back(words[rng() % words.size()]);
    e.assignments = {{"GTYPE", "g" + std::to_string(i)}};
    entries.push_back(std::move(e));
  }
  auto lex = CompiledLexicon::Compile(entries);
  for (int probe = 0; probe < 100; ++probe) {
    std::vector<Token> tokens;
    for (int j = 0; j < 6; ++j) {
      Token t;
      t.surface = words[rng() % words.size()];
      tokens.push_back(t);
    }
    // Oracle: scan every entry, keep the longest key that prefixes tokens.
    size_t best = 0;
    std::vector<Assignments> expect;
    for (const auto &e : entries) {
      if (e.key.size() > tokens.size()) continue;
      bool ok = true;
      for (size_t j = 0; j < e.key.size() && ok; ++j) {
        ok = e.key[j] == tokens[j].surface;
      }
      if (!ok) continue;
      if (e.key.size() > best) {
        best = e.key.size();
        expect.clear();
      }
      if (e.key.size() == best) expect.push_back(e.assignments);
    }
    auto m = lex.LongestMatch(tokens, 0, false);
    CHECK(m.length == best);
    if (best > 0) {
      REQUIRE(m.entries != nullptr);
      CHECK(*m.entries == expect);
    }
  }
}

TEST_CASE("annotate keeps the longest key per position") {
  TypeRegistry r = PackTypes();
  Tokenizer tk;
  auto lex = CompiledLexicon::Compile(ParseLexicon(
      "zaman zaman | GTYPE:adverb_t | TEMPORAL:repetitive | SURFACE:zaman zaman\n"
      "gerginlik yaşandı | GTYPE:verb | TEMPORAL:anterior | SURFACE:gerginlik yaşandı\n"
      "tahmin | GTYPE:noun | SURFACE:tahmin\n"
      "tahmin edilen | GTYPE:evidential_verb | SURFACE:tahmin edilen\n",
      r, tk));
  auto a = Annotate(tk.Tokenize("zaman zaman gerginlik yaşandı"), lex, r);
  REQUIRE(a.size() == 2);
  CHECK(a[0].span() == Span{0, 2});
  CHECK(a[0].Value("GTYPE") == "adverb_t");
  CHECK(a[1].span() == Span{2, 4});

  auto t = Annotate(tk.Tokenize("tahmin edilen"), lex, r);
  REQUIRE(t.size() == 1);
  CHECK(t[0].Value("GTYPE") == "evidential_verb");

  CHECK(Annotate(tk.Tokenize("hiçbir şey yok"), lex, r).empty());
}

// Oracle: enumerate every substring, keep per start the longest key present.
TEST_CASE("annotate agrees with a brute-force substring matcher") {
  TypeRegistry r;
  r.Declare({"gazetteer", {"GTYPE"}});
  std::mt19937 rng(11);
  const std::vector<std::string> words = {"x", "y", "z"};
  for (int round = 0; round < 200; ++round) {
    std::vector<LexiconEntry> entries;
    std::set<std::vector<std::string>> keys;
    for (int i = 0; i < 6; ++i) {
      LexiconEntry e;
      size_t len = 1 + rng() % 3;
      for (size_t j = 0; j < len; ++j) e.key.push_back(words[rng() % 3]);
      e.assignments = {{"GTYPE", "k" + std::to_string(i)}};
      keys.insert(e.key);
      entries.push_back(e);
    }
    auto lex = CompiledLexicon::Compile(entries);
    std::vector<Token> tokens;
    for (int j = 0; j < 7; ++j) {
      Token t;
      t.surface = words[rng() % 3];
      t.token_class = TokenClass::kLowercaseWord;
      tokens.push_back(t);
    }
    std::vector<std::pair<Span, std::string>> expect;
    for (size_t s = 0; s < tokens.size(); ++s) {
      size_t best = 0;
      for (size_t e = s + 1; e <= tokens.size(); ++e) {
        std::vector<std::string> k;
        for (size_t j = s; j < e; ++j) k.push_back(tokens[j].surface);
        if (keys.count(k)) best = e - s;
      }
      if (best == 0) continue;
      std::vector<std::string> k;
      for (size_t j = s; j < s + best; ++j) k.push_back(tokens[j].surface);
      for (const auto &e : entries) {
        if (e.key == k) expect.push_back({{s, s + best}, e.assignments.at("GTYPE")});
      }
    }
    std::vector<std::pair<Span, std::string>> got;
    for (const auto &f : Annotate(tokens, lex, r)) {
      got.push_back({f.span(), *f.Value("GTYPE")});
    }
    CHECK(got == expect);
  }
}

TEST_CASE("clause-initial capitals fold to lowercase keys") {
  TypeRegistry r = PackTypes();
  Tokenizer tk;
  auto lex = CompiledLexicon::Compile(ParseLexicon(
      "içme suyu | GTYPE:humanitarian_need | SURFACE:içme suyu\n"
      "belki | GTYPE:adverb_e | EPISTEMIC:probable | SURFACE:belki\n",
      r, tk));
  CHECK(Annotate(tk.Tokenize("Belki gelir"), lex, r).size() == 1);
  CHECK(Annotate(tk.Tokenize("Kızılay: \"İçme suyu\""), lex, r).size() == 1);
  CHECK(Annotate(tk.Tokenize("dün Belki gelir"), lex, r).empty());
}

}  // namespace
}  // namespace tamx
