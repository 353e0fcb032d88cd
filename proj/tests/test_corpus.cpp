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

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "koin/corpus.hpp"
#include "koin/errors.hpp"
#include "koin/metrics.hpp"
#include "koin/record.hpp"
#include "koin/rng.hpp"
#include "koin/sentence.hpp"
#include "koin/transforms.hpp"

using koin::AugmentOptions;
using koin::AugmentStats;
using koin::InputFormat;
using koin::Lexicon;
using koin::MixPlan;
using koin::Record;
using koin::Task;
using koin::TransformKind;
using koin::TransformSpec;

namespace {

const std::string kFixtures = KOIN_FIXTURE_DIR;

const Lexicon& lex() {
  static const Lexicon instance = Lexicon::default_lexicon();
  return instance;
}

std::vector<Record> fixture_records() {
  return koin::load_records(kFixtures + "/generic_20.jsonl",
                            InputFormat::kGenericJsonl);
}

std::map<std::string, std::size_t> label_histogram(
    const std::vector<Record>& records) {
  std::map<std::string, std::size_t> hist;
  for (const Record& record : records) {
    if (record.label.has_value()) ++hist[*record.label];
  }
  return hist;
}

bool sorted_by_id(const std::vector<Record>& records) {
  return std::is_sorted(
      records.begin(), records.end(),
      [](const Record& a, const Record& b) { return a.id < b.id; });
}

std::filesystem::path temp_dir() {
  const auto dir =
      std::filesystem::temp_directory_path() / "koin_corpus_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("topic classification adapter") {
  const std::vector<Record> records = koin::load_records(
      kFixtures + "/klue_tc_sample.json", InputFormat::kKlueTcJson);
  REQUIRE(records.size() == 6);
  CHECK(records[0].id == "tc-a001");
  CHECK(records[0].task == Task::kTc);
  CHECK(records[0].text_fields.at("title") == "나비가 꿀을 마신다");
  CHECK(records[0].label == "생활문화");
  CHECK_FALSE(records[0].provenance.has_value());
  // Numeric labels are stringified.
  CHECK(records[4].label == "4");
  // A record without a guid gets a positional id.
  CHECK(records[5].id == "tc-000005");

  CHECK_THROWS_AS(
      koin::parse_records(R"([{"guid": "x", "label": "y"}])",
                          InputFormat::kKlueTcJson),
      koin::SchemaError);
  try {
    koin::parse_records(R"([{"guid": "x"}])", InputFormat::kKlueTcJson);
    FAIL("expected SchemaError");
  } catch (const koin::SchemaError& e) {
    CHECK(e.field() == "title");
  }
}

TEST_CASE("inference pair adapter") {
  const std::vector<Record> records = koin::load_records(
      kFixtures + "/klue_nli_sample.json", InputFormat::kKlueNliJson);
  REQUIRE(records.size() == 4);
  CHECK(records[0].id == "nli-b001");
  CHECK(records[0].task == Task::kNli);
  CHECK(records[0].text_fields.at("premise") == "남자가 책을 읽는다.");
  CHECK(records[0].text_fields.at("hypothesis") == "남자는 독서를 한다.");
  CHECK(records[0].label == "entailment");

  try {
    koin::parse_records(R"([{"guid": "x", "premise": "문장."}])",
                        InputFormat::kKlueNliJson);
    FAIL("expected SchemaError");
  } catch (const koin::SchemaError& e) {
    CHECK(e.field() == "hypothesis");
  }
}

TEST_CASE("dialogue adapter") {
  const std::vector<Record> records = koin::load_records(
      kFixtures + "/aihub_dialogue_sample.json",
      InputFormat::kAihubDialogueJson);
  REQUIRE(records.size() == 2);
  CHECK(records[0].id == "dlg-c001");
  CHECK(records[0].task == Task::kDialogue);
  REQUIRE(records[0].utterances.size() == 3);
  CHECK(records[0].utterances[0].speaker == "P01");
  CHECK(records[0].utterances[0].text == "오늘 날씨가 좋다.");
  CHECK(records[0].utterances[1].speaker == "P02");
  CHECK(records[0].label == "두 사람이 공원 나들이를 계획한다.");
  CHECK(records[1].id == "dlg-c002");
  CHECK_FALSE(records[1].label.has_value());

  try {
    koin::parse_records(R"({"data": [{"header": {}}]})",
                        InputFormat::kAihubDialogueJson);
    FAIL("expected SchemaError");
  } catch (const koin::SchemaError& e) {
    CHECK(e.field() == "body");
  }
  CHECK_THROWS_AS(koin::parse_records(R"({"data": [{"body": {}}]})",
                                      InputFormat::kAihubDialogueJson),
                  koin::SchemaError);
}

TEST_CASE("generic jsonl adapter") {
  const std::vector<Record> records = fixture_records();
  REQUIRE(records.size() == 20);
  CHECK(records[0].id == "rec-001");
  CHECK(records[0].task == Task::kTc);
  CHECK(records[0].text_fields.at("title") == "나비가 꿀을 마신다.");
  CHECK(records[0].label == "일상");
  const auto hist = label_histogram(records);
  CHECK(hist.at("일상") == 8);
  CHECK(hist.at("학교") == 6);
  CHECK(hist.at("가족") == 4);
  CHECK(hist.at("동물") == 2);

  // Lines without an id get positional ids.
  const std::vector<Record> anon = koin::parse_records(
      "{\"text\": \"하나\"}\n{\"text\": \"둘\"}\n", InputFormat::kGenericJsonl);
  REQUIRE(anon.size() == 2);
  CHECK(anon[0].id == "rec-000000");
  CHECK(anon[1].id == "rec-000001");

  // Full record lines round-trip through the same reader.
  Record full;
  full.id = "r9";
  full.task = Task::kNli;
  full.text_fields["premise"] = "남자가 책을 읽는다.";
  full.text_fields["hypothesis"] = "남자는 독서를 한다.";
  const std::vector<Record> parsed = koin::parse_records(
      koin::record_to_json_line(full) + "\n", InputFormat::kGenericJsonl);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0] == full);

  CHECK_THROWS_AS(
      koin::parse_records("{\"label\": \"x\"}\n", InputFormat::kGenericJsonl),
      koin::SchemaError);
  CHECK_THROWS_WITH_AS(
      koin::parse_records("{\"text\": \"ok\"}\nnot json\n",
                          InputFormat::kGenericJsonl),
      doctest::Contains("line 2"), koin::ParseError);
}

TEST_CASE("format and field-mode names round-trip") {
  for (InputFormat format :
       {InputFormat::kKlueTcJson, InputFormat::kKlueNliJson,
        InputFormat::kAihubDialogueJson, InputFormat::kGenericJsonl}) {
    CHECK(koin::input_format_from_name(koin::input_format_name(format)) ==
          format);
  }
  CHECK_THROWS_AS(koin::input_format_from_name("csv"), koin::BadParamsError);

  for (koin::NliFields mode :
       {koin::NliFields::kPremise, koin::NliFields::kHypothesis,
        koin::NliFields::kBoth}) {
    CHECK(koin::nli_fields_from_name(koin::nli_fields_name(mode)) == mode);
  }
  CHECK_THROWS_AS(koin::nli_fields_from_name("neither"),
                  koin::BadParamsError);
}

TEST_CASE("record serialization is byte-deterministic") {
  Record record;
  record.id = "rec-001";
  record.task = Task::kDialogue;
  record.utterances = {{"P01", "오늘 날씨가 좋다."},
                       {"P02", "우리는 공원에 간다."}};
  record.label = "요약 문장.";
  koin::Provenance prov;
  prov.kind = "cm_del";
  prov.seed = 0xFFFFFFFFFFFFFFFFULL;  // full 64-bit seeds survive
  prov.parent_id = "rec-000";
  record.provenance = prov;

  const std::string line = koin::record_to_json_line(record);
  CHECK(line == koin::record_to_json_line(record));
  CHECK(line.find('\n') == std::string::npos);
  const Record back = koin::record_from_json_line(line);
  CHECK(back == record);

  CHECK_THROWS_AS(koin::record_from_json_line("{"), koin::ParseError);
  CHECK_THROWS_AS(koin::record_from_json_line("{\"task\": \"tc\"}"),
                  koin::SchemaError);
  CHECK_THROWS_AS(
      koin::record_from_json_line(
          R"({"id": "x", "task": "윷놀이", "fields": {"title": "t"}})"),
      koin::ParseError);
}

TEST_CASE("records jsonl files round-trip") {
  const auto dir = temp_dir();
  const std::string path = (dir / "roundtrip.jsonl").string();
  const std::vector<Record> records = fixture_records();
  koin::write_records_jsonl(path, records);
  CHECK(koin::read_records_jsonl(path) == records);
  // The temp file of the atomic write is gone.
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(koin::read_records_jsonl("/nonexistent/in.jsonl"),
                  koin::IoError);
}

TEST_CASE("pinned rounding") {
  CHECK(koin::round_half_away(0.0) == 0);
  CHECK(koin::round_half_away(0.4) == 0);
  CHECK(koin::round_half_away(0.5) == 1);
  CHECK(koin::round_half_away(1.5) == 2);
  CHECK(koin::round_half_away(2.5) == 3);
  CHECK(koin::round_half_away(2.4) == 2);
  CHECK(koin::round_half_away(2.6) == 3);
  CHECK(koin::round_half_away(-0.5) == -1);
  CHECK(koin::round_half_away(-1.5) == -2);
}

TEST_CASE("trial seeds") {
  CHECK(koin::effective_seed(42, 0) == 42);
  CHECK(koin::effective_seed(42, 1) == koin::derive_seed(42, 1));
  CHECK(koin::effective_seed(42, 7) == koin::derive_seed(42, 7));

  MixPlan base;
  base.rate = 0.5;
  base.global_seed = 42;
  const std::vector<MixPlan> trials = koin::make_trials(base, 3);
  REQUIRE(trials.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(trials[static_cast<std::size_t>(k)].trial_index == k);
    CHECK(trials[static_cast<std::size_t>(k)].rate == 0.5);
    CHECK(trials[static_cast<std::size_t>(k)].global_seed == 42);
  }
  CHECK_THROWS_AS(koin::make_trials(base, 0), koin::BadParamsError);
}

TEST_CASE("largest remainder apportionment") {
  using Counts = std::vector<std::pair<std::string, std::size_t>>;
  // 10 over 8/6/4/2 is exact.
  CHECK(koin::apportion_by_label(
            Counts{{"일상", 8}, {"학교", 6}, {"가족", 4}, {"동물", 2}}, 10) ==
        Counts{{"일상", 4}, {"학교", 3}, {"가족", 2}, {"동물", 1}});
  // 2 over 2/1: the larger remainder wins the leftover seat.
  CHECK(koin::apportion_by_label(Counts{{"A", 2}, {"B", 1}}, 2) ==
        Counts{{"A", 1}, {"B", 1}});
  // Remainder tie breaks toward the smaller label.
  CHECK(koin::apportion_by_label(Counts{{"b", 1}, {"a", 1}}, 1) ==
        Counts{{"b", 0}, {"a", 1}});
  CHECK(koin::apportion_by_label(Counts{{"A", 3}}, 3) == Counts{{"A", 3}});
  CHECK(koin::apportion_by_label({}, 0).empty());
  CHECK_THROWS_AS(koin::apportion_by_label(Counts{{"A", 1}}, 2),
                  koin::TooFewError);

  // Allocations always sum to n and never exceed a class size.
  koin::Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    Counts counts;
    std::size_t total = 0;
    const std::uint64_t classes = 1 + rng.bound(5);
    for (std::uint64_t c = 0; c < classes; ++c) {
      const std::size_t size = 1 + rng.bound(50);
      counts.emplace_back("L" + std::to_string(c), size);
      total += size;
    }
    const std::size_t n = rng.bound(total + 1);
    const auto quota = koin::apportion_by_label(counts, n);
    std::size_t sum = 0;
    for (std::size_t c = 0; c < quota.size(); ++c) {
      CHECK(quota[c].second <= counts[c].second);
      sum += quota[c].second;
    }
    CHECK(sum == n);
  }
}

TEST_CASE("stratified sampling preserves the label mix") {
  const std::vector<Record> records = fixture_records();
  const std::vector<Record> sample = koin::stratified_sample(records, 10, 7);
  REQUIRE(sample.size() == 10);
  CHECK(sorted_by_id(sample));
  const auto hist = label_histogram(sample);
  CHECK(hist.at("일상") == 4);
  CHECK(hist.at("학교") == 3);
  CHECK(hist.at("가족") == 2);
  CHECK(hist.at("동물") == 1);

  CHECK(koin::stratified_sample(records, 20, 7) == records);
  CHECK_THROWS_AS(koin::stratified_sample(records, 21, 7),
                  koin::TooFewError);

  std::vector<Record> broken = records;
  broken[3].label.reset();
  CHECK_THROWS_WITH_AS(koin::stratified_sample(broken, 5, 7),
                       doctest::Contains("rec-004"), koin::UnlabeledError);
}

TEST_CASE("sampling ignores input order") {
  const std::vector<Record> records = fixture_records();
  std::vector<Record> reversed(records.rbegin(), records.rend());
  CHECK(koin::stratified_sample(records, 10, 99) ==
        koin::stratified_sample(reversed, 10, 99));
  CHECK(koin::stratified_sample(records, 10, 99) !=
        koin::stratified_sample(records, 10, 100));
}

TEST_CASE("train/val split partitions the corpus") {
  const std::vector<Record> records = fixture_records();
  const auto [train, val] = koin::split_train_val(records, 0.9, 5);
  CHECK(train.size() == 18);
  CHECK(val.size() == 2);
  CHECK(sorted_by_id(train));
  CHECK(sorted_by_id(val));

  std::vector<Record> merged = train;
  merged.insert(merged.end(), val.begin(), val.end());
  std::sort(merged.begin(), merged.end(),
            [](const Record& a, const Record& b) { return a.id < b.id; });
  std::vector<Record> sorted_input = records;
  std::sort(sorted_input.begin(), sorted_input.end(),
            [](const Record& a, const Record& b) { return a.id < b.id; });
  CHECK(merged == sorted_input);

  // Size follows the pinned rounding: round(0.55 * 20) = 11.
  CHECK(koin::split_train_val(records, 0.55, 5).first.size() == 11);

  std::vector<Record> reversed(records.rbegin(), records.rend());
  CHECK(koin::split_train_val(records, 0.9, 5) ==
        koin::split_train_val(reversed, 0.9, 5));

  CHECK_THROWS_AS(koin::split_train_val(records, 0.0, 5),
                  koin::BadRatioError);
  CHECK_THROWS_AS(koin::split_train_val(records, 1.0, 5),
                  koin::BadRatioError);
}

TEST_CASE("single record transformation") {
  Record parent;
  parent.id = "rec-001";
  parent.task = Task::kTc;
  parent.text_fields["title"] = "나비가 꿀을 마신다.";
  parent.label = "일상";

  TransformSpec spec;
  spec.kind = TransformKind::kCmDel;
  spec.seed = 7;
  const Record child = koin::transform_record(parent, spec, lex());
  CHECK(child.id == "rec-001-cm_del");
  CHECK(child.task == Task::kTc);
  CHECK(child.label == "일상");
  CHECK(child.text_fields.at("title") == "나비 꿀 마신다.");
  REQUIRE(child.provenance.has_value());
  CHECK(child.provenance->kind == "cm_del");
  CHECK(child.provenance->seed == 7);
  CHECK(child.provenance->parent_id == "rec-001");

  spec.kind = TransformKind::kDuplicate;
  const Record dup = koin::transform_record(parent, spec, lex());
  CHECK(dup.text_fields == parent.text_fields);
  CHECK(dup.id == "rec-001-duplicate");
  REQUIRE(dup.provenance.has_value());
  CHECK(dup.provenance->kind == "duplicate");

  Record broken = parent;
  broken.text_fields.clear();
  spec.kind = TransformKind::kCmDel;
  CHECK_THROWS_AS(koin::transform_record(broken, spec, lex()),
                  koin::SchemaError);
}

TEST_CASE("premise and hypothesis run on field-derived seeds") {
  Record parent;
  parent.id = "nli-1";
  parent.task = Task::kNli;
  parent.text_fields["premise"] = "남자가 낡은 책을 천천히 읽는다.";
  parent.text_fields["hypothesis"] = "남자는 조용한 독서를 오래 한다.";

  TransformSpec spec;
  spec.kind = TransformKind::kShufSemPresrv;
  spec.seed = 31337;

  const Record child = koin::transform_record(parent, spec, lex());
  const auto expect_field = [&](const std::string& text,
                                std::uint64_t salt) {
    return koin::render_sentence(koin::shuf_sem_presrv(
        koin::parse_sentence(text), koin::derive_seed(spec.seed, salt)));
  };
  CHECK(child.text_fields.at("premise") ==
        expect_field(parent.text_fields.at("premise"), koin::kPremiseSalt));
  CHECK(child.text_fields.at("hypothesis") ==
        expect_field(parent.text_fields.at("hypothesis"),
                     koin::kHypothesisSalt));

  AugmentOptions premise_only;
  premise_only.nli_fields = koin::NliFields::kPremise;
  const Record half = koin::transform_record(parent, spec, lex(),
                                             premise_only);
  CHECK(half.text_fields.at("hypothesis") ==
        parent.text_fields.at("hypothesis"));
  CHECK(half.text_fields.at("premise") == child.text_fields.at("premise"));
}

TEST_CASE("dialogue utterances run on index-derived seeds") {
  Record parent;
  parent.id = "dlg-1";
  parent.task = Task::kDialogue;
  parent.utterances = {{"P01", "오늘 아침 날씨가 정말 좋다."},
                       {"P02", "우리는 점심에 넓은 공원에 간다."}};

  TransformSpec spec;
  spec.kind = TransformKind::kShufSemNonPresrv;
  spec.seed = 777;
  const Record child = koin::transform_record(parent, spec, lex());
  REQUIRE(child.utterances.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(child.utterances[i].speaker == parent.utterances[i].speaker);
    CHECK(child.utterances[i].text ==
          koin::render_sentence(koin::shuf_sem_non_presrv(
              koin::parse_sentence(parent.utterances[i].text),
              koin::derive_seed(spec.seed, i))));
  }
}

TEST_CASE("augmented set size and composition") {
  const std::vector<Record> records = fixture_records();
  MixPlan plan;
  plan.rate = 0.5;
  plan.global_seed = 1;
  plan.transform.kind = TransformKind::kCmDel;

  AugmentStats stats;
  const std::vector<Record> out =
      koin::build_augmented_set(records, plan, lex(), {}, &stats);
  CHECK(out.size() == 30);
  CHECK(stats.original_count == 20);
  CHECK(stats.child_count == 10);
  CHECK(stats.transform_failures == 0);
  CHECK(stats.warnings.empty());
  CHECK(sorted_by_id(out));

  std::size_t originals = 0;
  std::map<std::string, std::size_t> child_labels;
  std::vector<std::string> parent_ids;
  for (const Record& record : out) {
    if (!record.provenance.has_value()) {
      ++originals;
      continue;
    }
    CHECK(record.provenance->kind == "cm_del");
    CHECK(record.id == record.provenance->parent_id + "-cm_del");
    if (record.label.has_value()) ++child_labels[*record.label];
    parent_ids.push_back(record.provenance->parent_id);
  }
  CHECK(originals == 20);
  // Children are stratified over the label mix: 4/3/2/1.
  CHECK(child_labels.at("일상") == 4);
  CHECK(child_labels.at("학교") == 3);
  CHECK(child_labels.at("가족") == 2);
  CHECK(child_labels.at("동물") == 1);
  // Distinct parents.
  std::sort(parent_ids.begin(), parent_ids.end());
  CHECK(std::adjacent_find(parent_ids.begin(), parent_ids.end()) ==
        parent_ids.end());
}

TEST_CASE("rate boundaries") {
  const std::vector<Record> records = fixture_records();
  MixPlan plan;
  plan.global_seed = 9;
  plan.transform.kind = TransformKind::kCmDel;

  plan.rate = 0.0;
  CHECK(koin::build_augmented_set(records, plan, lex()).size() == 20);
  plan.rate = 1.0;
  CHECK(koin::build_augmented_set(records, plan, lex()).size() == 40);
  plan.rate = 0.3;  // round(6.0)
  CHECK(koin::build_augmented_set(records, plan, lex()).size() == 26);
  plan.rate = 1.2;
  CHECK_THROWS_AS(koin::build_augmented_set(records, plan, lex()),
                  koin::BadParamsError);
  plan.rate = -0.1;
  CHECK_THROWS_AS(koin::build_augmented_set(records, plan, lex()),
                  koin::BadParamsError);
}

TEST_CASE("augmentation ignores input order and worker count") {
  const std::vector<Record> records = fixture_records();
  MixPlan plan;
  plan.rate = 0.7;
  plan.global_seed = 404;
  plan.transform.kind = TransformKind::kShufSemNonPresrvCmDel;

  const std::vector<Record> base = koin::build_augmented_set(records, plan,
                                                             lex());
  std::vector<Record> reversed(records.rbegin(), records.rend());
  CHECK(koin::build_augmented_set(reversed, plan, lex()) == base);

  AugmentOptions parallel;
  parallel.jobs = 8;
  CHECK(koin::build_augmented_set(records, plan, lex(), parallel) == base);
}

TEST_CASE("provenance replays the exact child") {
  const std::vector<Record> records = fixture_records();
  std::map<std::string, Record> by_id;
  for (const Record& record : records) by_id[record.id] = record;

  for (TransformKind kind :
       {TransformKind::kCmDel, TransformKind::kShufSemPresrv,
        TransformKind::kShufSemNonPresrvCmDel, TransformKind::kRepetition}) {
    MixPlan plan;
    plan.rate = 0.5;
    plan.global_seed = 20260819;
    plan.transform.kind = kind;
    for (const Record& record :
         koin::build_augmented_set(records, plan, lex())) {
      if (!record.provenance.has_value()) continue;
      TransformSpec replay;
      replay.kind = koin::transform_kind_from_name(record.provenance->kind);
      replay.seed = record.provenance->seed;
      const Record again = koin::transform_record(
          by_id.at(record.provenance->parent_id), replay, lex());
      CHECK(again == record);
    }
  }
}

TEST_CASE("trials run on independent streams") {
  const std::vector<Record> records = fixture_records();
  MixPlan base;
  base.rate = 0.5;
  base.global_seed = 11;
  base.transform.kind = TransformKind::kShufSemNonPresrv;

  const std::vector<MixPlan> trials = koin::make_trials(base, 2);
  const auto out0 = koin::build_augmented_set(records, trials[0], lex());
  const auto out1 = koin::build_augmented_set(records, trials[1], lex());
  CHECK(out0 == koin::build_augmented_set(records, base, lex()));
  CHECK(out0 != out1);
}

TEST_CASE("a failing record drops only its child") {
  std::vector<Record> records;
  Record good;
  good.id = "a";
  good.task = Task::kTc;
  good.text_fields["title"] = "나비가 꿀을 마신다.";
  Record bad;
  bad.id = "b";
  bad.task = Task::kTc;  // no title field: the child transform throws
  records.push_back(good);
  records.push_back(bad);

  MixPlan plan;
  plan.rate = 1.0;
  plan.global_seed = 3;
  plan.transform.kind = TransformKind::kCmDel;

  AugmentStats stats;
  const std::vector<Record> out =
      koin::build_augmented_set(records, plan, lex(), {}, &stats);
  CHECK(out.size() == 3);  // two originals, one surviving child
  CHECK(stats.transform_failures == 1);
  REQUIRE(stats.warnings.size() == 1);
  CHECK(stats.warnings[0].find("record b") != std::string::npos);
}

TEST_CASE("manifest round trip") {
  koin::Manifest manifest;
  manifest.global_seed = 123456789;
  manifest.input_sha256 = std::string(64, 'a');
  manifest.tool_version = "0.1.0";
  manifest.run_config = {{"subcommand", "augment"}, {"rate", 0.5}};
  koin::TrialEntry trial;
  trial.trial_index = 0;
  trial.seed = 123456789;
  trial.outputs.push_back({"augmented.jsonl", std::string(64, 'b')});
  manifest.trials.push_back(trial);

  const std::string text = koin::manifest_to_json(manifest);
  CHECK(text == koin::manifest_to_json(manifest));
  CHECK(text.back() == '\n');

  const koin::Manifest back = koin::manifest_from_json(text);
  CHECK(back.global_seed == manifest.global_seed);
  CHECK(back.input_sha256 == manifest.input_sha256);
  CHECK(back.tool_version == manifest.tool_version);
  CHECK(back.run_config == manifest.run_config);
  REQUIRE(back.trials.size() == 1);
  CHECK(back.trials[0].trial_index == 0);
  CHECK(back.trials[0].seed == 123456789);
  REQUIRE(back.trials[0].outputs.size() == 1);
  CHECK(back.trials[0].outputs[0].file == "augmented.jsonl");
  CHECK(back.trials[0].outputs[0].sha256 == std::string(64, 'b'));

  CHECK_THROWS_AS(koin::manifest_from_json("not json"), koin::ParseError);
  CHECK_THROWS_AS(koin::manifest_from_json("{}"), koin::SchemaError);
}
