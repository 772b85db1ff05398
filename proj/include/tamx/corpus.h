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


#ifndef TAMX_CORPUS_H_
#define TAMX_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tamx/ffs.h"
#include "tamx/grammar.h"
#include "tamx/pack.h"
#include "tamx/tokenizer.h"

namespace tamx {

inline constexpr std::string_view kSentenceAnalysisType = "sentence_analysis";

struct DocumentName {
  int topic_number = 0;
  std::optional<int> sequence;
  std::string topic_name;
  std::string disaster_type;  // MMD, ND or DO
};

// `<topic>-<seq>-<Name>-<TYPE>` or `<topic>-<Name>-<TYPE>`, extension
// ignored.
std::optional<DocumentName> ParseDocumentName(std::string_view filename);

struct DocumentMetadata {
  std::optional<std::string> publication_date;
  std::optional<std::string> url;
  std::optional<std::string> author;
};

struct Document {
  std::string id;  // file stem
  std::filesystem::path path;
  DocumentName name;
  DocumentMetadata metadata;
  std::vector<std::string> lines;
  std::vector<bool> is_metadata;  // parallel to lines
};

// A line holding only a URL (optionally in angle brackets) or only a
// DD.MM.YYYY date with an optional HH:MM time.
bool IsUrlLine(std::string_view line);
bool IsDateLine(std::string_view line);

// Leading URL/date lines become metadata and are excluded from analysis.
Document MakeDocument(std::string id, DocumentName name,
                      std::vector<std::string> lines);

// Throws IoError if unreadable, and ParseError for a badly named file when
// `require_name` is set; otherwise an unparseable name leaves defaults.
Document ReadDocument(const std::filesystem::path &path,
                      bool require_name = true);

// Every .txt file under `root`, sorted by path. Badly named files are
// skipped with a warning. A regular file is read on its own.
std::vector<Document> IngestCorpus(const std::filesystem::path &root,
                                   std::vector<std::string> *warnings = nullptr);

struct Provenance {
  std::string document;
  size_t line = 0;      // 0-based line index in the document
  size_t sentence = 0;  // 0-based sentence index within the line
  CharSpan char_span;   // byte range of the match within the line
};

struct SentenceAnalysis {
  FlatFeatureStructure ffs;
  Provenance provenance;
  std::string sentence;     // sentence text
  std::string source_line;  // the whole line
  std::string disaster_type;
};

// Runs the cascade on one sentence and keeps its sentence_analysis items.
// Never throws for bad input; failures yield no analyses.
std::vector<SentenceAnalysis> AnalyzeSentence(
    const GrammarPack &pack, const SentenceSpan &sentence,
    std::string_view line, std::optional<SearchMode> mode = std::nullopt);

std::vector<SentenceAnalysis> AnalyzeDocument(
    const Document &doc, const GrammarPack &pack,
    std::optional<SearchMode> mode = std::nullopt);

// Documents are analysed on up to `jobs` threads; the result keeps the
// input order.
std::vector<std::vector<SentenceAnalysis>> AnalyzeCorpus(
    const std::vector<Document> &docs, const GrammarPack &pack,
    size_t jobs = 1, std::optional<SearchMode> mode = std::nullopt);

// The VERB words occur in order inside the analysis's char span.
bool ProvenanceSound(const SentenceAnalysis &analysis);

}  // namespace tamx

#endif  // TAMX_CORPUS_H_
