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

#ifndef TAMX_ERROR_H_
#define TAMX_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace tamx {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Type registry violations: unknown types, undeclared features, duplicates.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Syntax errors in declaration, lexicon, grammar and data files. Line and
// column are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line, int column = 0);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar rules that parse but cannot be evaluated.
class GrammarError : public Error {
 public:
  using Error::Error;
};

// Unknown category atoms, marker patterns and the like.
class TamError : public Error {
 public:
  using Error::Error;
};

// Pack loading failures. Carries every violation found, not just the first.
class PackError : public Error {
 public:
  explicit PackError(std::vector<std::string> violations);

  const std::vector<std::string> &violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tamx

#endif  // TAMX_ERROR_H_
