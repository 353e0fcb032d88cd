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

#include "koin/sentence.hpp"

#include <cctype>

#include "koin/utf8.hpp"

namespace koin {

namespace {

constexpr char32_t kEllipsis = 0x2026;

bool is_terminator(char32_t cp) {
  return cp == U'.' || cp == U'?' || cp == U'!' || cp == kEllipsis;
}

// Byte offset where the trailing terminator run of `token` starts;
// token.size() when there is none.
std::size_t terminator_run_start(std::string_view token) {
  std::size_t run = token.size();
  while (run > 0) {
    std::size_t start = run - 1;
    while (start > 0 &&
           (static_cast<unsigned char>(token[start]) & 0xC0) == 0x80) {
      --start;
    }
    std::size_t pos = start;
    const char32_t cp = utf8::decode(token, pos);
    if (pos != run || !is_terminator(cp)) break;
    run = start;
  }
  return run;
}

}  // namespace

Sentence parse_sentence(std::string_view text) {
  Sentence out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    const std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) out.eojeols.emplace_back(text.substr(start, i - start));
  }
  if (out.eojeols.empty()) return out;

  std::string& last = out.eojeols.back();
  const std::size_t run = terminator_run_start(last);
  if (run > 0 && run < last.size()) {
    out.terminal_punct = last.substr(run);
    last.resize(run);
  }
  return out;
}

std::string render_sentence(const Sentence& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.eojeols.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += sentence.eojeols[i];
  }
  out += sentence.terminal_punct;
  return out;
}

}  // namespace koin
