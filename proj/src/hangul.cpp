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

#include "koin/hangul.hpp"

#include <string>

#include "koin/errors.hpp"
#include "koin/utf8.hpp"

namespace koin {

namespace {

std::string hex_of(char32_t cp) {
  static const char* digits = "0123456789ABCDEF";
  std::string out = "U+";
  bool started = false;
  for (int shift = 28; shift >= 0; shift -= 4) {
    const int nib = static_cast<int>((cp >> shift) & 0xF);
    if (nib != 0 || started || shift <= 12) {
      out.push_back(digits[nib]);
      started = true;
    }
  }
  return out;
}

}  // namespace

Syllable decompose_syllable(char32_t cp) {
  if (!is_syllable(cp)) {
    throw NotHangulError(hex_of(cp) + " is not a precomposed Hangul syllable");
  }
  const int offset = static_cast<int>(cp - kSyllableBase);
  Syllable s;
  s.lead = offset / (kVowelCount * kTailSlots);
  s.vowel = (offset / kTailSlots) % kVowelCount;
  const int tail = offset % kTailSlots;
  if (tail != 0) s.tail = tail;
  return s;
}

char32_t compose_syllable(const Syllable& s) {
  const int tail = s.tail.value_or(0);
  if (s.lead < 0 || s.lead >= kLeadCount || s.vowel < 0 ||
      s.vowel >= kVowelCount || tail < 0 || tail >= kTailSlots ||
      (s.tail.has_value() && tail == 0)) {
    throw BadParamsError("syllable indices out of range");
  }
  return kSyllableBase +
         static_cast<char32_t>((s.lead * kVowelCount + s.vowel) * kTailSlots +
                               tail);
}

bool has_batchim(std::string_view eojeol) {
  if (eojeol.empty()) {
    throw EmptyInputError("has_batchim requires a non-empty eojeol");
  }
  const char32_t cp = utf8::last_codepoint(eojeol);
  if (!is_syllable(cp)) {
    throw NotHangulError(hex_of(cp) +
                         " at end of eojeol is not a Hangul syllable");
  }
  return (cp - kSyllableBase) % kTailSlots != 0;
}

std::optional<bool> batchim_of_last(std::string_view eojeol) {
  if (eojeol.empty()) return std::nullopt;
  const char32_t cp = utf8::last_codepoint(eojeol);
  if (!is_syllable(cp)) return std::nullopt;
  return (cp - kSyllableBase) % kTailSlots != 0;
}

}  // namespace koin
