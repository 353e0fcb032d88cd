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

#ifndef KOIN_HANGUL_HPP_
#define KOIN_HANGUL_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

namespace koin {

// Precomposed syllable block [U+AC00, U+D7A3]: 19 leads x 21 vowels x 28
// tail slots (slot 0 means no final consonant).
inline constexpr char32_t kSyllableBase = 0xAC00;
inline constexpr char32_t kSyllableLast = 0xD7A3;
inline constexpr int kLeadCount = 19;
inline constexpr int kVowelCount = 21;
inline constexpr int kTailSlots = 28;
inline constexpr int kSyllableCount = kLeadCount * kVowelCount * kTailSlots;

struct Syllable {
  int lead = 0;                // 0..18
  int vowel = 0;               // 0..20
  std::optional<int> tail;     // 1..27 when present

  bool operator==(const Syllable&) const = default;
};

inline constexpr bool is_syllable(char32_t cp) {
  return cp >= kSyllableBase && cp <= kSyllableLast;
}

// Throws NotHangulError if cp is outside the precomposed syllable block.
Syllable decompose_syllable(char32_t cp);

// Throws BadParamsError if any index is out of range.
char32_t compose_syllable(const Syllable& s);

// True iff the last code point of `eojeol` is a Hangul syllable with a
// final consonant. Throws EmptyInputError on empty input, NotHangulError
// if the last code point is not a Hangul syllable.
bool has_batchim(std::string_view eojeol);

// Non-throwing variant used by marker detection on mixed-script stems.
// nullopt when the last code point is not a precomposed syllable.
std::optional<bool> batchim_of_last(std::string_view eojeol);

}  // namespace koin

#endif  // KOIN_HANGUL_HPP_
