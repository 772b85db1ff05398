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

#include "tamx/corpus.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include "tamx/error.h"
#include "tamx/matcher.h"
#include "tamx/strings.h"

namespace tamx {

namespace fs = std::filesystem;

std::optional<DocumentName> ParseDocumentName(std::string_view filename) {
  static const std::regex kName(R"(^(\d+)-(?:(\d+)-)?(.+)-(MMD|ND|DO)$)");
  std::string stem = fs::path(std::string(filename)).stem().string();
  std::smatch m;
  if (!std::regex_match(stem, m, kName)) return std::nullopt;
  DocumentName name;
  name.topic_number = std::stoi(m[1].str());
  if (m[2].matched) name.sequence = std::stoi(m[2].str());
  name.topic_name = m[3].str();
  name.disaster_type = m[4].str();
  return name;
}

bool IsUrlLine(std::string_view line) {
  static const std::regex kUrl(R"(^<?(https?://|www\.)\S+?>?$)");
  std::string t = Trim(line);
  return std::regex_match(t, kUrl);
}

bool IsDateLine(std::string_view line) {
  static const std::regex kDate(
      R"(^\d{1,2}\.\d{1,2}\.\d{4}(,?\s+\d{1,2}:\d{2}(:\d{2})?)?$)");
  std::string t = Trim(line);
  return std::regex_match(t, kDate);
}

Document MakeDocument(std::string id, DocumentName name,
                      std::vector<std::string> lines) {
  Document doc;
  doc.id = std::move(id);
  doc.name = std::move(name);
  doc.lines = std::move(lines);
  doc.is_metadata.assign(doc.lines.size(), false);
  for (size_t i = 0; i < doc.lines.size(); ++i) {
    std::string t = Trim(doc.lines[i]);
    if (t.empty()) continue;
    if (IsUrlLine(t)) {
      if (t.front() == '<') t = t.substr(1, t.size() - 2);
      if (!doc.metadata.url) doc.metadata.url = t;
    } else if (IsDateLine(t)) {
      if (!doc.metadata.publication_date) doc.metadata.publication_date = t;
    } else {
      break;
    }
    doc.is_metadata[i] = true;
  }
  return doc;
}

Document ReadDocument(const fs::path &path, bool require_name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  std::optional<DocumentName> name = ParseDocumentName(path.filename().string());
  if (!name && require_name) {
    throw ParseError("'" + path.filename().string() +
                         "' does not follow <topic>-<seq>-<Name>-<TYPE>",
                     0);
  }
  Document doc = MakeDocument(path.stem().string(), name.value_or(DocumentName{}),
                              Lines(ss.str()));
  doc.path = path;
  return doc;
}

std::vector<Document> IngestCorpus(const fs::path &root,
                                   std::vector<std::string> *warnings) {
  std::error_code ec;
  if (fs::is_regular_file(root, ec)) return {ReadDocument(root, false)};
  if (!fs::is_directory(root, ec)) {
    throw IoError("cannot read " + root.string());
  }
  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(root, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".txt") {
      files.push_back(it->path());
    } else if (it->is_regular_file() && warnings != nullptr) {
      warnings->push_back("skipping " + it->path().string() +
                          ": not a .txt file");
    }
  }
  if (ec) throw IoError("cannot list " + root.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<Document> docs;
  for (const auto &f : files) {
    if (!ParseDocumentName(f.filename().string())) {
      if (warnings != nullptr) {
        warnings->push_back("skipping " + f.string() +
                            ": name does not follow <topic>-<seq>-<Name>-<TYPE>");
      }
      continue;
    }
    docs.push_back(ReadDocument(f));
  }
  return docs;
}

std::vector<SentenceAnalysis> AnalyzeSentence(const GrammarPack &pack,
                                              const SentenceSpan &sentence,
                                              std::string_view line,
                                              std::optional<SearchMode> mode) {
  std::vector<SentenceAnalysis> out;
  if (sentence.tokens.empty()) return out;
  try {
    Stream result = RunCascade(pack.cascade, line, sentence.tokens, pack.lexicon,
                               pack.context(), mode);
    for (const auto &item : result.items()) {
      if (item.type() != kSentenceAnalysisType) continue;
      SentenceAnalysis a;
      a.ffs = item;
      a.sentence = sentence.text;
      a.source_line = std::string(line);
      a.provenance.line = sentence.source_line_index;
      a.provenance.char_span = CharSpan{
          sentence.tokens[item.span().start].char_span.begin,
          sentence.tokens[item.span().end - 1].char_span.end};
      out.push_back(std::move(a));
    }
  } catch (const std::exception &) {
    out.clear();
  }
  return out;
}

std::vector<SentenceAnalysis> AnalyzeDocument(const Document &doc,
                                              const GrammarPack &pack,
                                              std::optional<SearchMode> mode) {
  std::vector<SentenceAnalysis> out;
  for (size_t i = 0; i < doc.lines.size(); ++i) {
    if (doc.is_metadata[i]) continue;
    std::vector<SentenceSpan> sentences =
        pack.tokenizer.SplitSentences(doc.lines[i], i);
    for (size_t s = 0; s < sentences.size(); ++s) {
      for (auto &a : AnalyzeSentence(pack, sentences[s], doc.lines[i], mode)) {
        a.provenance.document = doc.id;
        a.provenance.sentence = s;
        a.disaster_type = doc.name.disaster_type;
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

std::vector<std::vector<SentenceAnalysis>> AnalyzeCorpus(
    const std::vector<Document> &docs, const GrammarPack &pack, size_t jobs,
    std::optional<SearchMode> mode) {
  std::vector<std::vector<SentenceAnalysis>> out(docs.size());
  jobs = std::max<size_t>(1, std::min(jobs, docs.size()));
  if (jobs <= 1) {
    for (size_t i = 0; i < docs.size(); ++i) {
      out[i] = AnalyzeDocument(docs[i], pack, mode);
    }
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  for (size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (size_t i = next++; i < docs.size(); i = next++) {
        out[i] = AnalyzeDocument(docs[i], pack, mode);
      }
    });
  }
  for (auto &t : workers) t.join();
  return out;
}

bool ProvenanceSound(const SentenceAnalysis &analysis) {
  const CharSpan &span = analysis.provenance.char_span;
  if (span.begin > span.end || span.end > analysis.source_line.size()) {
    return false;
  }
  std::string_view region =
      std::string_view(analysis.source_line).substr(span.begin, span.end - span.begin);
  const std::string *verb = analysis.ffs.Get("VERB");
  if (verb == nullptr) return true;
  size_t at = 0;
  for (const auto &word : SplitWhitespace(*verb)) {
    size_t found = region.find(word, at);
    if (found == std::string_view::npos) return false;
    at = found + word.size();
  }
  return true;
}

}  // namespace tamx
