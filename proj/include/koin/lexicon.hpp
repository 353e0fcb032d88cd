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

#ifndef KOIN_LEXICON_HPP_
#define KOIN_LEXICON_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace koin {

enum class Role {
  kNominative,
  kAccusative,
  kTopic,
  kGenitive,
  kLocative,
  kInstrumental,
  kComitative,
  kAuxiliary,
};

std::string_view role_name(Role role);
// Throws UnknownRoleError on an unrecognized name.
Role role_from_name(std::string_view name);

enum class BatchimConstraint {
  kRequiresBatchim,    // stem must end in a final consonant
  kRequiresNoBatchim,  // stem must end in a bare vowel
  kUnconstrained,
};

struct ParticleEntry {
  std::string surface;
  Role role;
  BatchimConstraint constraint;

  bool operator==(const ParticleEntry&) const = default;
};

struct Segmentation {
  std::string stem;                       // nonempty
  std::optional<ParticleEntry> marker;
  std::string original;                   // source eojeol

  bool has_marker() const { return marker.has_value(); }
};

// Read-only after construction; safe for concurrent readers.
class Lexicon {
 public:
  // Case-marker inventory covering the nominative/accusative/topic/
  // genitive/locative/instrumental/comitative allomorph pairs plus the
  // common auxiliary particles. Entry order is the attachment preference
  // order for attach_marker.
  static Lexicon default_lexicon();

  // TSV, one entry per line: surface<TAB>role<TAB>constraint where
  // constraint is req, none, or any. Lines starting with # and blank
  // lines are skipped. Throws ParseError on malformed lines or IoError
  // when the file cannot be read.
  static Lexicon load_tsv(const std::string& path);
  static Lexicon parse_tsv(std::string_view text);

  const std::vector<ParticleEntry>& entries() const { return entries_; }

  // Detection and attachment consider only enabled roles. All roles are
  // enabled by default; topic and auxiliary particles can be switched
  // off for the narrow case-marker reading.
  void set_role_enabled(Role role, bool enabled);
  bool role_enabled(Role role) const;

 private:
  explicit Lexicon(std::vector<ParticleEntry> entries);

  std::vector<ParticleEntry> entries_;
  std::set<Role> disabled_;
};

// Longest enabled-lexicon suffix whose batchim constraint is satisfied
// by the remaining stem. Single-syllable eojeols and eojeols with no
// passing candidate come back unsplit; a no-marker result is valid, not
// an error. Throws EmptyInputError on empty input.
Segmentation detect_marker(std::string_view eojeol, const Lexicon& lexicon);

// Appends the first enabled entry of `role` whose batchim constraint
// matches the stem, preferring constrained allomorphs over unconstrained
// entries. Throws UnknownRoleError if the role has no enabled entry,
// EmptyInputError on an empty stem, NotHangulError when a constrained
// allomorph is required but the stem does not end in a Hangul syllable.
std::string attach_marker(std::string_view stem, Role role,
                          const Lexicon& lexicon);

}  // namespace koin

#endif  // KOIN_LEXICON_HPP_
