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


#ifndef TAMX_FUNCTIONAL_H_
#define TAMX_FUNCTIONAL_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tamx/ffs.h"

namespace tamx {

class Stream;
class TransformTable;

// What a functional operator may see besides its arguments. Collectors read
// the stream around the match and may widen `output`.
struct CallContext {
  const Stream *stream = nullptr;
  Span match;
  Span output;
  const TransformTable *transforms = nullptr;
};

// nullopt is an absent value. Operators never return an empty string; the
// registry turns one into nullopt.
using Value = std::optional<std::string>;
using Function =
    std::function<Value(const std::vector<Value> &args, CallContext &ctx)>;

class FunctionRegistry {
 public:
  // max_args < 0 means unbounded.
  void Register(std::string name, int min_args, int max_args, Function fn);

  bool Has(std::string_view name) const;
  // Throws GrammarError for an unknown name or a bad argument count.
  void CheckArity(std::string_view name, size_t count) const;
  Value Call(std::string_view name, const std::vector<Value> &args,
             CallContext &ctx) const;
  std::vector<std::string> names() const;

  // Conc, ConcWithBlanks, PersonNameInitial, IsReliablePersonName, DashJoin,
  // DashSlots, Combine, TempSpec, AdverbTemporal, AdverbEpistemic,
  // AdverbVolitional and CollectLeft.
  static const FunctionRegistry &Builtins();

 private:
  struct Entry {
    int min_args = 0;
    int max_args = -1;
    Function fn;
  };
  std::map<std::string, Entry, std::less<>> functions_;
};

// Surfaces that close a clause for CollectLeft.
bool IsClauseBoundary(std::string_view surface);

}  // namespace tamx

#endif  // TAMX_FUNCTIONAL_H_
