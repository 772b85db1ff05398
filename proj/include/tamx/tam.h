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


#ifndef TAMX_TAM_H_
#define TAMX_TAM_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tamx {

enum class Dimension { kVolitional, kEpistemic, kTemporal };

std::string_view DimensionName(Dimension dimension);
std::optional<Dimension> ParseDimension(std::string_view name);

const std::vector<std::string> &TemporalBases();
const std::vector<std::string> &EpistemicBases();
const std::vector<std::string> &VolitionalBases();
// Atoms that may follow a temporal base but are not bases themselves.
const std::vector<std::string> &TemporalSpecAtoms();

// base[_ana][_spec], e.g. anterior_ana_occ or perfect_persisting.
struct TemporalCategory {
  std::string base;
  bool anaphoric = false;
  std::string spec;  // may itself hold several atoms: perfect_persisting

  friend bool operator==(const TemporalCategory &,
                         const TemporalCategory &) = default;
};

// base, or neg_certain_ana_<base> for the negated anaphoric forms.
struct EpistemicCategory {
  std::string base;
  bool negated_anaphoric = false;

  friend bool operator==(const EpistemicCategory &,
                         const EpistemicCategory &) = default;
};

struct VolitionalCategory {
  std::string base;

  friend bool operator==(const VolitionalCategory &,
                         const VolitionalCategory &) = default;
};

// Temporal specification contributed by an adverb.
struct TempSpec {
  std::string value;
  std::string surface;

  friend bool operator==(const TempSpec &, const TempSpec &) = default;
};

struct TamClass {
  std::optional<VolitionalCategory> volitional;
  std::optional<EpistemicCategory> epistemic;
  std::optional<TemporalCategory> temporal;
  std::optional<TempSpec> tempspec;

  friend bool operator==(const TamClass &, const TamClass &) = default;
};

// All parsers throw TamError on an unknown atom.
TemporalCategory ParseTemporal(std::string_view atom);
EpistemicCategory ParseEpistemic(std::string_view atom);
VolitionalCategory ParseVolitional(std::string_view atom);
std::string Render(const TemporalCategory &c);
std::string Render(const EpistemicCategory &c);
std::string Render(const VolitionalCategory &c);

// Validates an atom for a dimension and returns its canonical rendering.
std::string CanonicalCategory(Dimension dimension, std::string_view atom);
bool IsValidCategory(Dimension dimension, std::string_view atom);

// "repetitive \ zaman zaman \"
std::string RenderTempSpec(const TempSpec &spec);
std::optional<TempSpec> ParseTempSpec(std::string_view text);

// Builds a class from rendered atoms; empty strings are absent dimensions.
TamClass MakeTamClass(std::string_view volitional, std::string_view epistemic,
                      std::string_view temporal);
// "vol + epi + temp" with "-" for an absent dimension.
std::string RenderTriple(const TamClass &tam);

struct Adverb {
  Dimension dimension = Dimension::kTemporal;
  // A category atom of the dimension or, for temporal adverbs, a bare
  // specification atom such as repetitive.
  std::string value;
  std::string surface;
};

struct TemporalTransform {
  std::string name;
  std::vector<std::string> adverb_values;
  std::vector<std::string> verb_bases;
  std::string result;  // "anaphoric" or a temporal category atom
};

class TransformTable {
 public:
  TransformTable() = default;
  explicit TransformTable(std::vector<TemporalTransform> rules);

  // `name | adverb values | verb bases | result`, '#' comments.
  static TransformTable Parse(std::string_view text);

  const TemporalTransform *Find(std::string_view adverb_value,
                                const TemporalCategory &verb) const;
  const std::vector<TemporalTransform> &rules() const { return rules_; }

 private:
  std::vector<TemporalTransform> rules_;
};

enum class AdverbEffect { kTransform, kOverride, kSpecification };

struct AdverbResult {
  TamClass tam;
  AdverbEffect effect = AdverbEffect::kSpecification;
  std::string transform;  // name when effect is kTransform
};

// Only the adverb's own dimension may change; temporal adverbs also set
// the tempspec.
AdverbResult ApplyAdverb(const TamClass &verb, const Adverb &adverb,
                         const TransformTable &transforms);

enum class MatrixKind { kReport, kEvidential, kPossibility };

// Per-dimension merge preferring the matrix.
TamClass MergeLeft(const TamClass &matrix, const TamClass &subordinate);
// MergeLeft after checking the subordinate carries a temporal category.
TamClass CombineSubordination(const TamClass &matrix, MatrixKind kind,
                              const TamClass &subordinate);

struct MarkerPattern {
  std::string name;
  std::vector<TamClass> classes;
};

class MarkerTable {
 public:
  // `pattern | vol + epi + temp` lines, '#' comments.
  static MarkerTable Parse(std::string_view text);

  // Case-insensitive; Turkish dotted and dotless i fold to I. Throws
  // TamError for an unknown pattern.
  const std::vector<TamClass> &Classes(std::string_view pattern) const;
  bool Has(std::string_view pattern) const;
  bool Allows(std::string_view pattern, const TamClass &tam) const;
  const std::vector<MarkerPattern> &patterns() const { return patterns_; }

  static std::string NormalizeName(std::string_view pattern);

 private:
  std::vector<MarkerPattern> patterns_;
};

}  // namespace tamx

#endif  // TAMX_TAM_H_
