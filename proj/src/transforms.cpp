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

#include "koin/transforms.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "koin/errors.hpp"
#include "koin/rng.hpp"

namespace koin {

namespace {

struct KindName {
  TransformKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 9> kKindNames = {{
    {TransformKind::kCmDel, "cm_del"},
    {TransformKind::kShufSemPresrv, "shuf_sem_presrv"},
    {TransformKind::kShufSemPresrvCmDel, "shuf_sem_presrv_cm_del"},
    {TransformKind::kShufSemNonPresrv, "shuf_sem_non_presrv"},
    {TransformKind::kShufSemNonPresrvCmDel, "shuf_sem_non_presrv_cm_del"},
    {TransformKind::kDuplicate, "duplicate"},
    {TransformKind::kRepetition, "repetition"},
    {TransformKind::kEda, "eda"},
    {TransformKind::kAeda, "aeda"},
}};

constexpr std::array<std::string_view, 6> kAedaPunct = {".", ";", "?",
                                                        ":", "!", ","};

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw BadParamsError(std::string(name) + " must be in [0, 1]");
  }
}

}  // namespace

std::string_view transform_kind_name(TransformKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "unknown";
}

TransformKind transform_kind_from_name(std::string_view name) {
  for (const auto& kn : kKindNames) {
    if (kn.name == name) return kn.kind;
  }
  throw BadParamsError("unknown transform kind: " + std::string(name));
}

SynonymLexicon parse_synonyms_tsv(std::string_view text) {
  SynonymLexicon out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> cells;
    std::size_t cell_start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        cells.emplace_back(line.substr(cell_start, i - cell_start));
        cell_start = i + 1;
      }
    }
    if (cells.size() < 2 || cells[0].empty()) {
      throw ParseError("synonym line " + std::to_string(line_no) +
                       ": expected word<TAB>alternative...");
    }
    std::vector<std::string> alts(cells.begin() + 1, cells.end());
    for (const auto& alt : alts) {
      if (alt.empty()) {
        throw ParseError("synonym line " + std::to_string(line_no) +
                         ": empty alternative");
      }
    }
    out[cells[0]] = std::move(alts);
  }
  return out;
}

SynonymLexicon load_synonyms_tsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open synonym file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_synonyms_tsv(buf.str());
}

Sentence cm_del(const Sentence& sentence, const Lexicon& lexicon) {
  Sentence out = sentence;
  for (std::string& eojeol : out.eojeols) {
    eojeol = detect_marker(eojeol, lexicon).stem;
  }
  return out;
}

Sentence shuf_sem_presrv(const Sentence& sentence, std::uint64_t seed) {
  Sentence out = sentence;
  if (out.eojeols.size() > 2) {
    std::vector<std::string> head(out.eojeols.begin(), out.eojeols.end() - 1);
    Rng rng(seed);
    rng.shuffle(head);
    head.push_back(std::move(out.eojeols.back()));
    out.eojeols = std::move(head);
  }
  return out;
}

Sentence shuf_sem_non_presrv(const Sentence& sentence, std::uint64_t seed) {
  Sentence out = sentence;
  Rng rng(seed);
  rng.shuffle(out.eojeols);
  return out;
}

Sentence baseline_repetition(const Sentence& sentence, std::uint64_t seed) {
  if (sentence.empty()) {
    throw EmptyInputError("repetition requires a non-empty sentence");
  }
  Sentence out = sentence;
  Rng rng(seed);
  const auto idx =
      static_cast<std::size_t>(rng.bound(out.eojeols.size()));
  out.eojeols.insert(out.eojeols.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                     out.eojeols[idx]);
  return out;
}

Sentence baseline_eda(const Sentence& sentence, std::uint64_t seed,
                      const EdaParams& params, const SynonymLexicon* synonyms,
                      std::vector<std::string>* warnings) {
  check_probability(params.p_syn_replace, "p_syn_replace");
  check_probability(params.p_syn_insert, "p_syn_insert");
  check_probability(params.p_swap, "p_swap");
  check_probability(params.p_delete, "p_delete");

  Rng rng(seed);
  std::vector<std::string> out = sentence.eojeols;

  const bool have_synonyms = synonyms != nullptr && !synonyms->empty();
  if (have_synonyms) {
    for (std::string& word : out) {
      if (!rng.chance(params.p_syn_replace)) continue;
      const auto it = synonyms->find(word);
      if (it == synonyms->end() || it->second.empty()) continue;
      word = it->second[static_cast<std::size_t>(rng.bound(it->second.size()))];
    }
    const std::size_t attempts = out.size();
    for (std::size_t n = 0; n < attempts; ++n) {
      if (!rng.chance(params.p_syn_insert)) continue;
      const auto idx = static_cast<std::size_t>(rng.bound(out.size()));
      const auto it = synonyms->find(out[idx]);
      if (it == synonyms->end() || it->second.empty()) continue;
      const std::string word =
          it->second[static_cast<std::size_t>(rng.bound(it->second.size()))];
      const auto gap = static_cast<std::size_t>(rng.bound(out.size() + 1));
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap), word);
    }
  } else if (warnings != nullptr &&
             (params.p_syn_replace > 0.0 || params.p_syn_insert > 0.0)) {
    warnings->push_back(
        "eda: no synonym lexicon given; synonym operations skipped");
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!rng.chance(params.p_swap)) continue;
    const auto j = static_cast<std::size_t>(rng.bound(out.size()));
    std::swap(out[i], out[j]);
  }

  std::vector<std::string> kept;
  kept.reserve(out.size());
  for (std::string& word : out) {
    if (!rng.chance(params.p_delete)) kept.push_back(std::move(word));
  }
  if (kept.empty() && !out.empty()) {
    // No word was moved out above, so `out` is intact here.
    const auto idx = static_cast<std::size_t>(rng.bound(out.size()));
    kept.push_back(std::move(out[idx]));
  }

  Sentence result;
  result.eojeols = std::move(kept);
  result.terminal_punct = sentence.terminal_punct;
  return result;
}

Sentence baseline_aeda(const Sentence& sentence, std::uint64_t seed,
                       double insert_ratio) {
  if (!(insert_ratio >= 0.0)) {
    throw BadParamsError("insert_ratio must be >= 0");
  }
  Sentence out = sentence;
  Rng rng(seed);
  const auto inserts = static_cast<std::size_t>(
      insert_ratio * static_cast<double>(sentence.eojeols.size()));
  for (std::size_t n = 0; n < inserts; ++n) {
    const auto gap =
        static_cast<std::size_t>(rng.bound(out.eojeols.size() + 1));
    const auto& mark =
        kAedaPunct[static_cast<std::size_t>(rng.bound(kAedaPunct.size()))];
    out.eojeols.insert(out.eojeols.begin() + static_cast<std::ptrdiff_t>(gap),
                       std::string(mark));
  }
  return out;
}

Sentence apply_transform(const Sentence& sentence, const TransformSpec& spec,
                         const Lexicon& lexicon,
                         const SynonymLexicon* synonyms,
                         std::vector<std::string>* warnings) {
  switch (spec.kind) {
    case TransformKind::kCmDel:
      return cm_del(sentence, lexicon);
    case TransformKind::kShufSemPresrv:
      return shuf_sem_presrv(sentence, spec.seed);
    case TransformKind::kShufSemPresrvCmDel:
      return cm_del(shuf_sem_presrv(sentence, spec.seed), lexicon);
    case TransformKind::kShufSemNonPresrv:
      return shuf_sem_non_presrv(sentence, spec.seed);
    case TransformKind::kShufSemNonPresrvCmDel:
      return cm_del(shuf_sem_non_presrv(sentence, spec.seed), lexicon);
    case TransformKind::kDuplicate:
      return sentence;
    case TransformKind::kRepetition:
      return baseline_repetition(sentence, spec.seed);
    case TransformKind::kEda: {
      EdaParams params;
      params.p_syn_replace = spec.param_or("p_syn_replace", 0.0);
      params.p_syn_insert = spec.param_or("p_syn_insert", 0.0);
      params.p_swap = spec.param_or("p_swap", 0.0);
      params.p_delete = spec.param_or("p_delete", 0.0);
      return baseline_eda(sentence, spec.seed, params, synonyms, warnings);
    }
    case TransformKind::kAeda:
      return baseline_aeda(sentence, spec.seed,
                           spec.param_or("insert_ratio", 0.0));
  }
  throw BadParamsError("unhandled transform kind");
}

}  // namespace koin
