// Copyright 2026 The koin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KOIN_METRICS_HPP_
#define KOIN_METRICS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koin/lexicon.hpp"
#include "koin/sentence.hpp"

namespace koin {

enum class EditOpKind { kKeep, kSubstitute, kInsert, kDelete };

struct EditOp {
  EditOpKind kind;
  std::string from;  // source word; empty for insert
  std::string to;    // target word; empty for delete

  bool operator==(const EditOp&) const = default;
};

struct EditScript {
  std::vector<EditOp> ops;
  std::size_t cost = 0;  // number of non-keep ops, DP-optimal
};

// Minimal unit-cost Levenshtein script over whole words, exact string
// match only. Ties break deterministically: keep/substitute, then
// delete, then insert.
EditScript word_edit_distance(const std::vector<std::string>& a,
                              const std::vector<std::string>& b);

// Replays `script` against `source`. Used by tests to check that every
// script transforms its source into its target.
std::vector<std::string> apply_edit_script(
    const std::vector<std::string>& source, const EditScript& script);

// Edit cost divided by the original word count. Unclamped: corrections
// that lengthen the sentence can push it above 1. Throws EmptyInputError
// when original has no words.
double correction_rate(const Sentence& original, const Sentence& corrected);

// Fraction of restored-marker positions whose marker is absent from the
// incomplete side, 0 when restored carries no markers. Both sides must
// reduce to the same stem sequence; throws StemMismatchError otherwise.
double omission_rate(const Sentence& incomplete, const Sentence& restored,
                     const Lexicon& lexicon);

struct SentencePair {
  Sentence incomplete;
  std::optional<Sentence> restored;
};

// Row categories of the corpus report. Every record lands in exactly one.
inline constexpr const char* kCategoryMarkerOmitted = "case_marker_omitted";
inline constexpr const char* kCategoryMarkerComplete = "complete_case_marker";
inline constexpr const char* kCategoryNonCanonicalOrder =
    "non_canonical_order";
inline constexpr const char* kCategoryStemMismatch = "stem_mismatch";
inline constexpr const char* kCategoryUnpaired = "unpaired";

struct IncompletenessReport {
  std::size_t sample_count = 0;  // records examined
  std::size_t paired_count = 0;  // records with a restored reference
  // Mean detector marker count per record: restored side over paired
  // records, incomplete side over all records.
  double marker_position_avg = 0.0;
  double marker_count_incomplete_avg = 0.0;
  // Mean over stem-aligned pairs.
  double omission_rate_avg = 0.0;
  // Mean over non-canonical pairs, computed on stem sequences.
  double correction_rate_avg = 0.0;
  std::map<std::string, std::size_t> category_counts;
};

// Aggregates both rates and the detector marker counts. Pairs whose stem
// sequences align contribute an omission rate; pairs whose stems agree
// only as multisets are counted as non-canonical word order and
// contribute a stem-level correction rate; remaining pairs are tallied
// as stem mismatches rather than failing the whole report.
IncompletenessReport corpus_report(const std::vector<SentencePair>& pairs,
                                   const Lexicon& lexicon);

}  // namespace koin

#endif  // KOIN_METRICS_HPP_
