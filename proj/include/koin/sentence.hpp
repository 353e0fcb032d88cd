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

#ifndef KOIN_SENTENCE_HPP_
#define KOIN_SENTENCE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace koin {

// Whitespace-tokenized sentence with sentence-final punctuation held
// separately so word-level transforms never move or mangle it.
struct Sentence {
  std::vector<std::string> eojeols;  // nonempty, whitespace-free tokens
  std::string terminal_punct;        // "" when none was detached

  bool empty() const { return eojeols.empty(); }
  std::size_t size() const { return eojeols.size(); }

  bool operator==(const Sentence&) const = default;
};

// Splits on ASCII whitespace and detaches the trailing run of sentence
// terminators (. ? ! and U+2026) from the last token. A token that is
// nothing but terminators stays an eojeol so tokens remain nonempty.
Sentence parse_sentence(std::string_view text);

// Joins eojeols with single spaces and appends terminal_punct.
std::string render_sentence(const Sentence& sentence);

}  // namespace koin

#endif  // KOIN_SENTENCE_HPP_
