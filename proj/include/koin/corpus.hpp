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

#ifndef KOIN_CORPUS_HPP_
#define KOIN_CORPUS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "koin/lexicon.hpp"
#include "koin/record.hpp"
#include "koin/sentence.hpp"
#include "koin/transforms.hpp"

namespace koin {

enum class InputFormat {
  kKlueTcJson,        // JSON array: guid / title / label
  kKlueNliJson,       // JSON array: guid / premise / hypothesis / gold_label
  kAihubDialogueJson, // nested conversation JSON, see README
  kGenericJsonl,      // {"text", "label"?, "id"?} or full record lines
};

std::string_view input_format_name(InputFormat format);
// Throws BadParamsError on an unrecognized name.
InputFormat input_format_from_name(std::string_view name);

// One Record per source instance, ids taken from the source when present
// and derived from the position otherwise. Throws ParseError with the
// line or element position, SchemaError naming the missing field, and
// IoError when the file cannot be read.
std::vector<Record> load_records(const std::string& path, InputFormat format);
std::vector<Record> parse_records(std::string_view text, InputFormat format);

// Full-schema record JSONL, one record per line.
std::vector<Record> read_records_jsonl(const std::string& path);
void write_records_jsonl(const std::string& path,
                         const std::vector<Record>& records);

// Which NLI text fields a transform touches.
enum class NliFields { kPremise, kHypothesis, kBoth };

std::string_view nli_fields_name(NliFields mode);
NliFields nli_fields_from_name(std::string_view name);

// Pinned rounding for all count arithmetic: half away from zero.
std::int64_t round_half_away(double x);

// trial 0 runs on the seed itself; later trials derive an independent
// stream per index.
std::uint64_t effective_seed(std::uint64_t global_seed, int trial_index);

// Salt for the parent-sampling stream, distinct from the per-record
// record-index salts.
inline constexpr std::uint64_t kSampleSalt = 0x73616D70ULL;
// Field salts under a record seed.
inline constexpr std::uint64_t kPremiseSalt = 1;
inline constexpr std::uint64_t kHypothesisSalt = 2;

struct MixPlan {
  double rate = 0.0;  // augmented_count == round(N * rate), rate in [0, 1]
  TransformSpec transform;
  int trial_index = 0;
  std::uint64_t global_seed = 0;
};

// k plans differing only in trial_index 0..k-1. Throws BadParamsError
// when k < 1.
std::vector<MixPlan> make_trials(const MixPlan& base, int k);

// Largest-remainder apportionment of n over the class counts, ties
// broken by larger remainder then smaller label. Exposed for tests.
std::vector<std::pair<std::string, std::size_t>> apportion_by_label(
    const std::vector<std::pair<std::string, std::size_t>>& class_counts,
    std::size_t n);

// Per-class counts follow apportion_by_label over the label frequencies;
// selection within a class is uniform. Records are reseeded on their
// sorted-by-id order, so input order does not matter. Output is sorted
// by id. Throws UnlabeledError when a record has no label, TooFewError
// when n exceeds the record count.
std::vector<Record> stratified_sample(const std::vector<Record>& records,
                                      std::size_t n, std::uint64_t seed);

// Shuffled partition: |train| == round(ratio * N), no overlap, no loss,
// both halves sorted by id. Throws BadRatioError unless 0 < ratio < 1.
std::pair<std::vector<Record>, std::vector<Record>> split_train_val(
    const std::vector<Record>& records, double ratio, std::uint64_t seed);

struct AugmentOptions {
  NliFields nli_fields = NliFields::kBoth;
  unsigned jobs = 1;
  const SynonymLexicon* synonyms = nullptr;
  // Replaces the rule-based meaning-preserving reorder step (both pure
  // and marker-deleting variants) when set; receives the field seed.
  std::function<Sentence(const Sentence&, std::uint64_t)> reorder_hook;
};

struct AugmentStats {
  std::size_t original_count = 0;
  std::size_t child_count = 0;
  std::size_t transform_failures = 0;
  std::vector<std::string> warnings;  // includes per-record failures
};

// Applies plan.transform to one parent. The child keeps the task and
// label, gets id parent.id + "-" + kind, and carries provenance
// {kind, seed, parent id}. NLI fields and dialogue utterances run on
// seeds derived from `seed` (premise 1, hypothesis 2, utterance index),
// so the recorded seed alone replays the whole record.
Record transform_record(const Record& parent, const TransformSpec& spec,
                        const Lexicon& lexicon,
                        const AugmentOptions& options = {},
                        std::vector<std::string>* warnings = nullptr);

// All originals plus round(N * rate) transformed copies of distinct
// parents, stratified over labels when every record has one, globally
// sorted by id. Per-record transform errors are tallied into `stats`
// and drop only the failing child. Throws BadParamsError when rate is
// outside [0, 1].
std::vector<Record> build_augmented_set(const std::vector<Record>& records,
                                        const MixPlan& plan,
                                        const Lexicon& lexicon,
                                        const AugmentOptions& options = {},
                                        AugmentStats* stats = nullptr);

struct TrialOutput {
  std::string file;  // basename
  std::string sha256;
};

struct TrialEntry {
  int trial_index = 0;
  std::uint64_t seed = 0;  // effective seed of this trial
  std::vector<TrialOutput> outputs;
};

struct Manifest {
  std::uint64_t global_seed = 0;
  std::vector<TrialEntry> trials;
  std::string input_sha256;
  std::string tool_version;
  nlohmann::json run_config;  // resolved CLI configuration, replayable
};

// Deterministic pretty JSON with sorted keys and trailing newline.
std::string manifest_to_json(const Manifest& manifest);
// Throws ParseError / SchemaError.
Manifest manifest_from_json(std::string_view text);

}  // namespace koin

#endif  // KOIN_CORPUS_HPP_
