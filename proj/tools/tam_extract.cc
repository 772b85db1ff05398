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

// tam-extract: command-line front end for the extraction pipeline.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tamx/corpus.h"
#include "tamx/error.h"
#include "tamx/lexicon.h"
#include "tamx/pack.h"
#include "tamx/render.h"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kPackError = 2;
constexpr int kIoError = 3;

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tamx::IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw tamx::IoError("cannot write " + path);
}

std::string DefaultPack() {
  const char *env = std::getenv("TAM_PACK");
  return env != nullptr ? env : "";
}

void PrintViolations(const tamx::PackError &e) {
  std::cerr << "pack validation failed:\n";
  for (const auto &v : e.violations()) std::cerr << "  " << v << "\n";
}

int CompileLexicon(const std::string &pack_dir, const std::string &in,
                   const std::string &out) {
  tamx::TypeRegistry registry = tamx::TypeRegistry::Parse(
      ReadFile((std::filesystem::path(pack_dir) / "types.decl").string()));
  auto entries = tamx::ParseLexicon(ReadFile(in), registry);
  size_t count = entries.size();
  WriteOutput(out, tamx::CompiledLexicon::Compile(std::move(entries)).Serialize());
  std::cerr << "compiled " << count << " entries\n";
  return kOk;
}

struct RunOptions {
  std::string pack;
  std::string input;
  std::string format = "block";
  std::vector<std::string> filters;
  std::string mode;
  std::string out;
  std::string lexicon;
  size_t jobs = 1;
};

int Run(const RunOptions &opt) {
  std::vector<tamx::FilterExpr> filters;
  try {
    for (const auto &f : opt.filters) filters.push_back(tamx::ParseFilter(f));
  } catch (const tamx::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::optional<tamx::SearchMode> mode;
  if (!opt.mode.empty()) mode = tamx::ParseSearchMode(opt.mode);

  tamx::GrammarPack pack = tamx::LoadPack(opt.pack);
  if (!opt.lexicon.empty()) {
    pack.lexicon = tamx::CompiledLexicon::Deserialize(ReadFile(opt.lexicon));
  }
  std::vector<std::string> warnings;
  auto docs = tamx::IngestCorpus(opt.input, &warnings);
  for (const auto &w : warnings) std::cerr << "warning: " << w << "\n";

  auto per_doc = tamx::AnalyzeCorpus(docs, pack, opt.jobs, mode);
  std::vector<tamx::SentenceAnalysis> all;
  for (auto &d : per_doc) {
    for (auto &a : d) all.push_back(std::move(a));
  }
  all = tamx::FilterAnalyses(all, filters);
  if (opt.format == "json") {
    WriteOutput(opt.out, tamx::RenderJson(all));
  } else {
    WriteOutput(opt.out, tamx::RenderBlocks(all, pack.registry));
  }
  return kOk;
}

int ValidatePack(const std::string &dir) {
  tamx::GrammarPack pack = tamx::LoadPack(dir);
  for (const auto &w : pack.warnings) std::cerr << "warning: " << w << "\n";
  size_t rules = 0;
  for (const auto &level : pack.cascade.levels) rules += level.rules.size();
  std::cout << "ok: " << pack.cascade.levels.size() << " levels, " << rules
            << " rules, " << pack.lexicon.size() << " lexicon entries, "
            << pack.verb_markers.size() << " marker-tagged verbs, 0 violations\n";
  return kOk;
}

int Catalog(const std::string &dir) {
  tamx::GrammarPack pack = tamx::LoadPack(dir);
  for (const auto &e : tamx::RuleCatalog(pack)) {
    std::cout << e.rule << "\t" << e.level << "\t" << e.output_type << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Extracts TAM-classified sentence analyses from news text."};
  app.require_subcommand(1);

  std::string compile_pack = DefaultPack();
  std::string compile_in;
  std::string compile_out;
  auto *compile = app.add_subcommand("compile-lexicon",
                                     "Compile a lexicon source file to JSON");
  compile->add_option("input", compile_in, "Lexicon source")->required();
  compile->add_option("output", compile_out, "Compiled lexicon")->required();
  compile->add_option("--pack", compile_pack, "Pack supplying types.decl");

  RunOptions run_opt;
  run_opt.pack = DefaultPack();
  auto *run = app.add_subcommand("run", "Analyse a document or corpus");
  run->add_option("--pack", run_opt.pack, "Grammar pack directory (TAM_PACK)");
  run->add_option("--input", run_opt.input, "File or corpus directory")
      ->required();
  run->add_option("--format", run_opt.format, "Output format")
      ->check(CLI::IsMember({"block", "json"}));
  run->add_option("--filter", run_opt.filters, "dimension=value, repeatable");
  run->add_option("--mode", run_opt.mode, "Override every level's search mode")
      ->check(CLI::IsMember({"longest_match", "all_matches",
                             "all_longest_matches"}));
  run->add_option("--out", run_opt.out, "Output file (default stdout)");
  run->add_option("--lexicon", run_opt.lexicon, "Compiled lexicon to use");
  run->add_option("--jobs", run_opt.jobs, "Worker threads")
      ->check(CLI::Range(1, 256));

  std::string validate_dir;
  auto *validate = app.add_subcommand("validate-pack", "Validate a grammar pack");
  validate->add_option("dir", validate_dir, "Pack directory")->required();

  std::string catalog_dir;
  auto *catalog = app.add_subcommand("catalog", "List the rules of a pack");
  catalog->add_option("dir", catalog_dir, "Pack directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compile) {
      if (compile_pack.empty()) {
        std::cerr << "compile-lexicon needs --pack or TAM_PACK\n";
        return kUsage;
      }
      return CompileLexicon(compile_pack, compile_in, compile_out);
    }
    if (*run) {
      if (run_opt.pack.empty()) {
        std::cerr << "run needs --pack or TAM_PACK\n";
        return kUsage;
      }
      return Run(run_opt);
    }
    if (*validate) return ValidatePack(validate_dir);
    if (*catalog) return Catalog(catalog_dir);
  } catch (const tamx::PackError &e) {
    PrintViolations(e);
    return kPackError;
  } catch (const tamx::IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const tamx::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPackError;
  } catch (const tamx::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPackError;
  }
  return kUsage;
}
