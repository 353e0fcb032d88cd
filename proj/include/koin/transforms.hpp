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

#ifndef KOIN_TRANSFORMS_HPP_
#define KOIN_TRANSFORMS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "koin/lexicon.hpp"
#include "koin/sentence.hpp"

namespace koin {

enum class TransformKind {
  kCmDel,                 // delete every detected case marker
  kShufSemPresrv,         // permute pre-predicate words, predicate stays last
  kShufSemPresrvCmDel,    // the above, then delete markers
  kShufSemNonPresrv,      // permute all words
  kShufSemNonPresrvCmDel, // the above, then delete markers
  kDuplicate,             // corpus-level verbatim copy
  kRepetition,            // duplicate one random word in place
  kEda,                   // synonym replace/insert, swap, delete
  kAeda,                  // random punctuation insertion
};

std::string_view transform_kind_name(TransformKind kind);
// Throws BadParamsError on an unrecognized name.
TransformKind transform_kind_from_name(std::string_view name);

constexpr std::array<TransformKind, 9> kAllTransformKinds = {
    TransformKind::kCmDel,
    TransformKind::kShufSemPresrv,
    TransformKind::kShufSemPresrvCmDel,
    TransformKind::kShufSemNonPresrv,
    TransformKind::kShufSemNonPresrvCmDel,
    TransformKind::kDuplicate,
    TransformKind::kRepetition,
    TransformKind::kEda,
    TransformKind::kAeda,
};

// The five incompleteness constructions, in presentation order.
constexpr std::array<TransformKind, 5> kIncompletenessKinds = {
    TransformKind::kCmDel,
    TransformKind::kShufSemPresrv,
    TransformKind::kShufSemPresrvCmDel,
    TransformKind::kShufSemNonPresrv,
    TransformKind::kShufSemNonPresrvCmDel,
};

struct TransformSpec {
  TransformKind kind = TransformKind::kCmDel;
  std::map<std::string, double> params;  // kind-specific
  std::uint64_t seed = 0;

  double param_or(const std::string& name, double fallback) const {
    const auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
  }
};

// word -> alternatives; consulted by the two EDA synonym operations.
using SynonymLexicon = std::map<std::string, std::vector<std::string>>;

// TSV: word<TAB>alt1<TAB>alt2... Lines starting with # are comments.
// Throws ParseError / IoError.
SynonymLexicon load_synonyms_tsv(const std::string& path);
SynonymLexicon parse_synonyms_tsv(std::string_view text);

// Every operation is a pure function: it derives a private PRNG from the
// given seed and never mutates its input.

Sentence cm_del(const Sentence& sentence, const Lexicon& lexicon);
Sentence shuf_sem_presrv(const Sentence& sentence, std::uint64_t seed);
Sentence shuf_sem_non_presrv(const Sentence& sentence, std::uint64_t seed);

// Throws EmptyInputError on an empty sentence.
Sentence baseline_repetition(const Sentence& sentence, std::uint64_t seed);

struct EdaParams {
  double p_syn_replace = 0.0;
  double p_syn_insert = 0.0;
  double p_swap = 0.0;
  double p_delete = 0.0;
};

// Applies synonym replacement, synonym insertion, swaps, then deletion.
// With no synonym lexicon the two synonym operations are skipped; if
// that drops a requested operation (probability > 0) a warning is pushed
// to `warnings`. At least one eojeol always survives deletion. Throws
// BadParamsError when any probability is outside [0, 1].
Sentence baseline_eda(const Sentence& sentence, std::uint64_t seed,
                      const EdaParams& params,
                      const SynonymLexicon* synonyms = nullptr,
                      std::vector<std::string>* warnings = nullptr);

// Inserts floor(insert_ratio * word_count) punctuation tokens from
// {".", ";", "?", ":", "!", ","} at uniformly chosen gaps. Throws
// BadParamsError when insert_ratio < 0.
Sentence baseline_aeda(const Sentence& sentence, std::uint64_t seed,
                       double insert_ratio);

// Dispatches on spec.kind. kDuplicate returns the sentence verbatim (the
// corpus mixer implements duplication by re-emitting records). EDA reads
// params p_syn_replace / p_syn_insert / p_swap / p_delete, AEDA reads
// insert_ratio.
Sentence apply_transform(const Sentence& sentence, const TransformSpec& spec,
                         const Lexicon& lexicon,
                         const SynonymLexicon* synonyms = nullptr,
                         std::vector<std::string>* warnings = nullptr);

}  // namespace koin

#endif  // KOIN_TRANSFORMS_HPP_
