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

#include "koin/lexicon.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "koin/errors.hpp"
#include "koin/hangul.hpp"

namespace koin {

namespace {

struct RoleName {
  Role role;
  std::string_view name;
};

constexpr std::array<RoleName, 8> kRoleNames = {{
    {Role::kNominative, "nominative"},
    {Role::kAccusative, "accusative"},
    {Role::kTopic, "topic"},
    {Role::kGenitive, "genitive"},
    {Role::kLocative, "locative"},
    {Role::kInstrumental, "instrumental"},
    {Role::kComitative, "comitative"},
    {Role::kAuxiliary, "auxiliary"},
}};

BatchimConstraint constraint_from_token(std::string_view token, int line_no) {
  if (token == "req") return BatchimConstraint::kRequiresBatchim;
  if (token == "none") return BatchimConstraint::kRequiresNoBatchim;
  if (token == "any") return BatchimConstraint::kUnconstrained;
  throw ParseError("lexicon line " + std::to_string(line_no) +
                   ": constraint must be req, none, or any");
}

// A constrained allomorph accepts the stem only when the stem's final
// code point is a Hangul syllable with the matching batchim state.
bool constraint_satisfied(BatchimConstraint c, std::string_view stem) {
  if (c == BatchimConstraint::kUnconstrained) return true;
  const std::optional<bool> batchim = batchim_of_last(stem);
  if (!batchim.has_value()) return false;
  return (c == BatchimConstraint::kRequiresBatchim) == *batchim;
}

}  // namespace

std::string_view role_name(Role role) {
  for (const auto& rn : kRoleNames) {
    if (rn.role == role) return rn.name;
  }
  return "unknown";
}

Role role_from_name(std::string_view name) {
  for (const auto& rn : kRoleNames) {
    if (rn.name == name) return rn.role;
  }
  throw UnknownRoleError("unknown grammatical role: " + std::string(name));
}

Lexicon::Lexicon(std::vector<ParticleEntry> entries)
    : entries_(std::move(entries)) {}

Lexicon Lexicon::default_lexicon() {
  using BC = BatchimConstraint;
  return Lexicon({
      {"가", Role::kNominative, BC::kRequiresNoBatchim},
      {"이", Role::kNominative, BC::kRequiresBatchim},
      {"을", Role::kAccusative, BC::kRequiresBatchim},
      {"를", Role::kAccusative, BC::kRequiresNoBatchim},
      {"은", Role::kTopic, BC::kRequiresBatchim},
      {"는", Role::kTopic, BC::kRequiresNoBatchim},
      {"의", Role::kGenitive, BC::kUnconstrained},
      {"에", Role::kLocative, BC::kUnconstrained},
      {"에서", Role::kLocative, BC::kUnconstrained},
      {"로", Role::kInstrumental, BC::kRequiresNoBatchim},
      {"으로", Role::kInstrumental, BC::kRequiresBatchim},
      {"와", Role::kComitative, BC::kRequiresNoBatchim},
      {"과", Role::kComitative, BC::kRequiresBatchim},
      {"도", Role::kAuxiliary, BC::kUnconstrained},
      {"만", Role::kAuxiliary, BC::kUnconstrained},
      {"부터", Role::kAuxiliary, BC::kUnconstrained},
      {"까지", Role::kAuxiliary, BC::kUnconstrained},
  });
}

Lexicon Lexicon::parse_tsv(std::string_view text) {
  std::vector<ParticleEntry> entries;
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

    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 =
        tab1 == std::string_view::npos ? std::string_view::npos
                                       : line.find('\t', tab1 + 1);
    if (tab1 == std::string_view::npos || tab2 == std::string_view::npos ||
        line.find('\t', tab2 + 1) != std::string_view::npos) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": expected surface<TAB>role<TAB>constraint");
    }
    ParticleEntry entry;
    entry.surface = std::string(line.substr(0, tab1));
    if (entry.surface.empty()) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": empty surface");
    }
    entry.role = role_from_name(line.substr(tab1 + 1, tab2 - tab1 - 1));
    entry.constraint = constraint_from_token(line.substr(tab2 + 1), line_no);
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(entries));
}

Lexicon Lexicon::load_tsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tsv(buf.str());
}

void Lexicon::set_role_enabled(Role role, bool enabled) {
  if (enabled) {
    disabled_.erase(role);
  } else {
    disabled_.insert(role);
  }
}

bool Lexicon::role_enabled(Role role) const {
  return disabled_.find(role) == disabled_.end();
}

Segmentation detect_marker(std::string_view eojeol, const Lexicon& lexicon) {
  if (eojeol.empty()) {
    throw EmptyInputError("detect_marker requires a non-empty eojeol");
  }
  Segmentation seg;
  seg.original = std::string(eojeol);

  // Longest suffix wins; ties cannot occur because surfaces are compared
  // by byte length against the same eojeol tail.
  const ParticleEntry* best = nullptr;
  for (const ParticleEntry& entry : lexicon.entries()) {
    if (!lexicon.role_enabled(entry.role)) continue;
    if (entry.surface.size() >= eojeol.size()) continue;  // stem nonempty
    if (best != nullptr && entry.surface.size() <= best->surface.size()) {
      continue;
    }
    if (eojeol.substr(eojeol.size() - entry.surface.size()) != entry.surface) {
      continue;
    }
    const std::string_view stem =
        eojeol.substr(0, eojeol.size() - entry.surface.size());
    if (!constraint_satisfied(entry.constraint, stem)) continue;
    best = &entry;
  }

  if (best == nullptr) {
    seg.stem = std::string(eojeol);
    return seg;
  }
  seg.stem = std::string(eojeol.substr(0, eojeol.size() - best->surface.size()));
  seg.marker = *best;
  return seg;
}

std::string attach_marker(std::string_view stem, Role role,
                          const Lexicon& lexicon) {
  if (stem.empty()) {
    throw EmptyInputError("attach_marker requires a non-empty stem");
  }
  if (!lexicon.role_enabled(role)) {
    throw UnknownRoleError("role is disabled in this lexicon: " +
                           std::string(role_name(role)));
  }

  // Constrained allomorphs take precedence so that allomorph pairs pick
  // the batchim-correct form; unconstrained entries are the fallback,
  // both in lexicon order.
  const ParticleEntry* fallback = nullptr;
  bool saw_role = false;
  for (const ParticleEntry& entry : lexicon.entries()) {
    if (entry.role != role) continue;
    saw_role = true;
    if (entry.constraint == BatchimConstraint::kUnconstrained) {
      if (fallback == nullptr) fallback = &entry;
      continue;
    }
    // has_batchim throws NotHangul for stems whose final code point
    // cannot carry the batchim test; that is the contract for
    // constrained attachment.
    const bool batchim = has_batchim(stem);
    if ((entry.constraint == BatchimConstraint::kRequiresBatchim) == batchim) {
      return std::string(stem) + entry.surface;
    }
  }
  if (fallback != nullptr) return std::string(stem) + fallback->surface;
  if (saw_role) {
    throw UnknownRoleError("no allomorph of role " +
                           std::string(role_name(role)) +
                           " matches the stem batchim");
  }
  throw UnknownRoleError("role has no lexicon entry: " +
                         std::string(role_name(role)));
}

}  // namespace koin
