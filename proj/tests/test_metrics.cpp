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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "koin/errors.hpp"
#include "koin/lexicon.hpp"
#include "koin/metrics.hpp"
#include "koin/rng.hpp"
#include "koin/sentence.hpp"
#include "koin/transforms.hpp"

using koin::Lexicon;
using koin::Sentence;
using koin::SentencePair;

namespace {

const Lexicon& lex() {
  static const Lexicon instance = Lexicon::default_lexicon();
  return instance;
}

Sentence S(const std::string& text) { return koin::parse_sentence(text); }

}  // namespace

TEST_CASE("correction rate of the reference reordering is two thirds") {
  const double rate =
      koin::correction_rate(S("꿀을 나비가 마신다."), S("나비가 꿀을 마신다."));
  CHECK(rate == 2.0 / 3.0);
}

TEST_CASE("correction rate basics") {
  CHECK(koin::correction_rate(S("나비가 꿀을 마신다."),
                              S("나비가 꿀을 마신다.")) == 0.0);
  // One dropped word out of three.
  CHECK(koin::correction_rate(S("나비가 꿀을 마신다."), S("나비가 마신다.")) ==
        1.0 / 3.0);
  // Lengthening corrections push the raw ratio above one.
  CHECK(koin::correction_rate(S("간다."), S("정말 빨리 간다.")) == 2.0);
  CHECK_THROWS_AS(koin::correction_rate(S(""), S("간다.")),
                  koin::EmptyInputError);
}

TEST_CASE("omission rate of fully stripped markers is one") {
  CHECK(koin::omission_rate(S("나비 꿀 마신다."), S("나비가 꿀을 마신다."),
                            lex()) == 1.0);
}

TEST_CASE("omission rate counts only missing positions") {
  CHECK(koin::omission_rate(S("나비가 꿀 마신다."), S("나비가 꿀을 마신다."),
                            lex()) == 0.5);
  CHECK(koin::omission_rate(S("나비가 꿀을 마신다."),
                            S("나비가 꿀을 마신다."), lex()) == 0.0);
  // A marker on the incomplete side that the restored side lacks does not
  // count; the rate stays within [0, 1].
  CHECK(koin::omission_rate(S("나비가 꿀 마신다."), S("나비 꿀을 마신다."),
                            lex()) == 1.0);
  CHECK(koin::omission_rate(S("나비가 꿀을 마신다."), S("나비 꿀 마신다."),
                            lex()) == 0.0);
}

TEST_CASE("omission rate is zero when the reference has no markers") {
  CHECK(koin::omission_rate(S("동생 학교 간다."), S("동생 학교 간다."),
                            lex()) == 0.0);
}

TEST_CASE("omission rate needs aligned stems") {
  CHECK_THROWS_AS(koin::omission_rate(S("나비 물 마신다."),
                                      S("나비가 꿀을 마신다."), lex()),
                  koin::StemMismatchError);
  // Reordering also breaks the alignment.
  CHECK_THROWS_AS(koin::omission_rate(S("꿀 나비 마신다."),
                                      S("나비가 꿀을 마신다."), lex()),
                  koin::StemMismatchError);
}

TEST_CASE("omission rate stays in the unit interval under marker deletion") {
  koin::Rng rng(424242);
  const std::vector<std::string> texts = {
      "나비가 꿀을 마신다.",     "아이가 사과를 먹는다.",
      "동생은 학교에서 공부를 한다.", "선생님이 책을 읽는다.",
      "강아지도 공원에서 뛴다.",
  };
  for (const std::string& text : texts) {
    const Sentence restored = S(text);
    for (int trial = 0; trial < 50; ++trial) {
      // Randomly keep or strip each marker.
      Sentence incomplete;
      incomplete.terminal_punct = restored.terminal_punct;
      for (const std::string& eojeol : restored.eojeols) {
        const koin::Segmentation seg = koin::detect_marker(eojeol, lex());
        incomplete.eojeols.push_back(
            seg.has_marker() && rng.chance(0.5) ? seg.stem : eojeol);
      }
      const double rate = koin::omission_rate(incomplete, restored, lex());
      CHECK(rate >= 0.0);
      CHECK(rate <= 1.0);
    }
  }
}

TEST_CASE("full marker deletion always scores one when markers exist") {
  for (const std::string text :
       {"나비가 꿀을 마신다.", "의사가 환자를 치료한다.",
        "형은 운동을 좋아한다."}) {
    const Sentence restored = S(text);
    const Sentence incomplete = koin::cm_del(restored, lex());
    CHECK(koin::omission_rate(incomplete, restored, lex()) == 1.0);
  }
}

TEST_CASE("corpus report on a handcrafted mix") {
  std::vector<SentencePair> pairs;
  pairs.push_back({S("나비 꿀 마신다."), S("나비가 꿀을 마신다.")});
  pairs.push_back({S("아이가 사과를 먹는다."), S("아이가 사과를 먹는다.")});
  pairs.push_back({S("꿀을 나비가 마신다."), S("나비가 꿀을 마신다.")});
  pairs.push_back({S("나비 물 마신다."), S("나비가 꿀을 마신다.")});
  pairs.push_back({S("동생 학교 간다."), std::nullopt});

  const koin::IncompletenessReport report = koin::corpus_report(pairs, lex());
  CHECK(report.sample_count == 5);
  CHECK(report.paired_count == 4);
  CHECK(report.marker_position_avg == 2.0);
  // Incomplete-side markers: 0 + 2 + 2 + 0 + 0 over 5 records.
  CHECK(report.marker_count_incomplete_avg == 0.8);
  // Aligned pairs: rates 1.0 and 0.0.
  CHECK(report.omission_rate_avg == 0.5);
  // One reordered pair with stem-level cost 2 over 3 words.
  CHECK(report.correction_rate_avg == 2.0 / 3.0);
  CHECK(report.category_counts.at(koin::kCategoryMarkerOmitted) == 1);
  CHECK(report.category_counts.at(koin::kCategoryMarkerComplete) == 1);
  CHECK(report.category_counts.at(koin::kCategoryNonCanonicalOrder) == 1);
  CHECK(report.category_counts.at(koin::kCategoryStemMismatch) == 1);
  CHECK(report.category_counts.at(koin::kCategoryUnpaired) == 1);
}

TEST_CASE("corpus report on an empty corpus") {
  const koin::IncompletenessReport report = koin::corpus_report({}, lex());
  CHECK(report.sample_count == 0);
  CHECK(report.paired_count == 0);
  CHECK(report.marker_position_avg == 0.0);
  CHECK(report.marker_count_incomplete_avg == 0.0);
  CHECK(report.omission_rate_avg == 0.0);
  CHECK(report.correction_rate_avg == 0.0);
  // All five categories are present, each at zero.
  REQUIRE(report.category_counts.size() == 5);
  for (const auto& [name, count] : report.category_counts) {
    CAPTURE(name);
    CHECK(count == 0);
  }
}

TEST_CASE("every record lands in exactly one category") {
  std::vector<SentencePair> pairs;
  pairs.push_back({S("나비 꿀 마신다."), S("나비가 꿀을 마신다.")});
  pairs.push_back({S("마신다 꿀 나비."), S("나비가 꿀을 마신다.")});
  pairs.push_back({S("전혀 다른 문장."), S("나비가 꿀을 마신다.")});
  pairs.push_back({S("혼자."), std::nullopt});
  const koin::IncompletenessReport report = koin::corpus_report(pairs, lex());
  std::size_t total = 0;
  for (const auto& [name, count] : report.category_counts) total += count;
  CHECK(total == report.sample_count);
}

TEST_CASE("unpaired records still feed the incomplete marker average") {
  std::vector<SentencePair> pairs;
  pairs.push_back({S("나비가 꿀을 마신다."), std::nullopt});
  const koin::IncompletenessReport report = koin::corpus_report(pairs, lex());
  CHECK(report.sample_count == 1);
  CHECK(report.paired_count == 0);
  CHECK(report.marker_count_incomplete_avg == 2.0);
  CHECK(report.marker_position_avg == 0.0);
  CHECK(report.category_counts.at(koin::kCategoryUnpaired) == 1);
}
