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

#include "koin/metrics.hpp"

#include <algorithm>
#include <map>

#include "koin/errors.hpp"

namespace koin {

namespace {

struct DetectedSide {
  std::vector<std::string> stems;
  std::vector<bool> marked;
  std::size_t marker_count = 0;
};

DetectedSide detect_side(const Sentence& sentence, const Lexicon& lexicon) {
  DetectedSide side;
  side.stems.reserve(sentence.eojeols.size());
  side.marked.reserve(sentence.eojeols.size());
  for (const std::string& eojeol : sentence.eojeols) {
    Segmentation seg = detect_marker(eojeol, lexicon);
    side.marked.push_back(seg.has_marker());
    if (seg.has_marker()) ++side.marker_count;
    side.stems.push_back(std::move(seg.stem));
  }
  return side;
}

bool same_multiset(std::vector<std::string> a, std::vector<std::string> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

EditScript word_edit_distance(const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();

  // dist[i][j]: cost of editing a[0..i) into b[0..j).
  std::vector<std::vector<std::size_t>> dist(
      n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) dist[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) dist[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = dist[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const std::size_t del = dist[i - 1][j] + 1;
      const std::size_t ins = dist[i][j - 1] + 1;
      dist[i][j] = std::min({diag, del, ins});
    }
  }

  // Backtrace, preferring diagonal, then delete, then insert, so equal
  // inputs always produce the same script.
  std::vector<EditOp> rev;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool match = a[i - 1] == b[j - 1];
      if (dist[i][j] == dist[i - 1][j - 1] + (match ? 0 : 1)) {
        rev.push_back({match ? EditOpKind::kKeep : EditOpKind::kSubstitute,
                       a[i - 1], b[j - 1]});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && dist[i][j] == dist[i - 1][j] + 1) {
      rev.push_back({EditOpKind::kDelete, a[i - 1], ""});
      --i;
      continue;
    }
    rev.push_back({EditOpKind::kInsert, "", b[j - 1]});
    --j;
  }

  EditScript script;
  script.ops.assign(rev.rbegin(), rev.rend());
  script.cost = dist[n][m];
  return script;
}

std::vector<std::string> apply_edit_script(
    const std::vector<std::string>& source, const EditScript& script) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const auto consume = [&source, &i](const EditOp& op) {
    if (i >= source.size()) {
      throw BadParamsError("edit script overruns its source");
    }
    if (source[i] != op.from) {
      throw BadParamsError("edit script does not match its source");
    }
    ++i;
  };
  for (const EditOp& op : script.ops) {
    switch (op.kind) {
      case EditOpKind::kKeep:
      case EditOpKind::kSubstitute:
        consume(op);
        out.push_back(op.to);
        break;
      case EditOpKind::kInsert:
        out.push_back(op.to);
        break;
      case EditOpKind::kDelete:
        consume(op);
        break;
    }
  }
  if (i != source.size()) {
    throw BadParamsError("edit script does not consume its source");
  }
  return out;
}

double correction_rate(const Sentence& original, const Sentence& corrected) {
  if (original.empty()) {
    throw EmptyInputError("correction_rate requires a non-empty original");
  }
  const EditScript script =
      word_edit_distance(original.eojeols, corrected.eojeols);
  return static_cast<double>(script.cost) /
         static_cast<double>(original.eojeols.size());
}

double omission_rate(const Sentence& incomplete, const Sentence& restored,
                     const Lexicon& lexicon) {
  const DetectedSide inc = detect_side(incomplete, lexicon);
  const DetectedSide res = detect_side(restored, lexicon);
  if (inc.stems != res.stems) {
    throw StemMismatchError(
        "incomplete and restored sentences reduce to different stems");
  }
  if (res.marker_count == 0) return 0.0;
  std::size_t omitted = 0;
  for (std::size_t i = 0; i < res.marked.size(); ++i) {
    if (res.marked[i] && !inc.marked[i]) ++omitted;
  }
  return static_cast<double>(omitted) /
         static_cast<double>(res.marker_count);
}

IncompletenessReport corpus_report(const std::vector<SentencePair>& pairs,
                                   const Lexicon& lexicon) {
  IncompletenessReport report;
  report.category_counts[kCategoryMarkerOmitted] = 0;
  report.category_counts[kCategoryMarkerComplete] = 0;
  report.category_counts[kCategoryNonCanonicalOrder] = 0;
  report.category_counts[kCategoryStemMismatch] = 0;
  report.category_counts[kCategoryUnpaired] = 0;

  std::size_t restored_marker_sum = 0;
  std::size_t incomplete_marker_sum = 0;
  double omission_sum = 0.0;
  std::size_t omission_n = 0;
  double correction_sum = 0.0;
  std::size_t correction_n = 0;

  for (const SentencePair& pair : pairs) {
    ++report.sample_count;
    const DetectedSide inc = detect_side(pair.incomplete, lexicon);
    incomplete_marker_sum += inc.marker_count;
    if (!pair.restored.has_value()) {
      ++report.category_counts[kCategoryUnpaired];
      continue;
    }
    ++report.paired_count;
    const DetectedSide res = detect_side(*pair.restored, lexicon);
    restored_marker_sum += res.marker_count;

    if (inc.stems == res.stems) {
      std::size_t omitted = 0;
      for (std::size_t i = 0; i < res.marked.size(); ++i) {
        if (res.marked[i] && !inc.marked[i]) ++omitted;
      }
      const double rate =
          res.marker_count == 0
              ? 0.0
              : static_cast<double>(omitted) /
                    static_cast<double>(res.marker_count);
      omission_sum += rate;
      ++omission_n;
      ++report.category_counts[omitted > 0 ? kCategoryMarkerOmitted
                                           : kCategoryMarkerComplete];
    } else if (same_multiset(inc.stems, res.stems)) {
      // Reordered record: alignment is gone, so measure the word-order
      // distance on the stem sequences instead.
      const EditScript script = word_edit_distance(inc.stems, res.stems);
      correction_sum += static_cast<double>(script.cost) /
                        static_cast<double>(inc.stems.size());
      ++correction_n;
      ++report.category_counts[kCategoryNonCanonicalOrder];
    } else {
      ++report.category_counts[kCategoryStemMismatch];
    }
  }

  if (report.paired_count > 0) {
    report.marker_position_avg = static_cast<double>(restored_marker_sum) /
                                 static_cast<double>(report.paired_count);
  }
  if (report.sample_count > 0) {
    report.marker_count_incomplete_avg =
        static_cast<double>(incomplete_marker_sum) /
        static_cast<double>(report.sample_count);
  }
  if (omission_n > 0) {
    report.omission_rate_avg = omission_sum / static_cast<double>(omission_n);
  }
  if (correction_n > 0) {
    report.correction_rate_avg =
        correction_sum / static_cast<double>(correction_n);
  }
  return report;
}

}  // namespace koin
