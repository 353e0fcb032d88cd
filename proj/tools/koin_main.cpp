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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "koin/corpus.hpp"
#include "koin/digest.hpp"
#include "koin/errors.hpp"
#include "koin/metrics.hpp"
#include "koin/record.hpp"
#include "koin/rewriter.hpp"
#include "koin/sentence.hpp"
#include "koin/transforms.hpp"
#include "koin/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitTransport = 3;

// Files created by the running command, removed again if it fails so a
// failed run leaves no partial outputs behind.
std::vector<fs::path> g_written_files;

void note_written(const fs::path& path) { g_written_files.push_back(path); }

void remove_written_files() {
  for (const fs::path& path : g_written_files) {
    std::error_code ec;
    fs::remove(path, ec);
  }
  g_written_files.clear();
}

void write_text_file(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw koin::IoError("cannot open output file: " + tmp.string());
    out << content;
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw koin::IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw koin::IoError("cannot move output into place: " + path.string());
  }
  note_written(path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw koin::IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

koin::Lexicon load_lexicon(const std::string& path) {
  return path.empty() ? koin::Lexicon::default_lexicon()
                      : koin::Lexicon::load_tsv(path);
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// ---------------------------------------------------------------------
// augment

struct AugmentArgs {
  std::string in_path;
  std::string format = "generic_jsonl";
  std::string transform = "cm_del";  // kind name or all5
  double rate = 1.0;
  std::optional<std::uint64_t> seed;
  int trials = 1;
  std::string lexicon_path;
  std::string out_dir = ".";
  std::string nli_fields = "both";
  unsigned jobs = 1;
  std::string synonyms_path;
  double p_syn_replace = 0.1;
  double p_syn_insert = 0.1;
  double p_swap = 0.1;
  double p_delete = 0.1;
  double insert_ratio = 0.3;
  bool rewriter = false;
  std::string rewriter_config_path;
  std::string replay_manifest;
};

std::vector<koin::TransformKind> resolve_kinds(const std::string& transform) {
  if (transform == "all5") {
    return {koin::kIncompletenessKinds.begin(),
            koin::kIncompletenessKinds.end()};
  }
  return {koin::transform_kind_from_name(transform)};
}

std::map<std::string, double> transform_params(
    const AugmentArgs& args, koin::TransformKind kind) {
  std::map<std::string, double> params;
  if (kind == koin::TransformKind::kEda) {
    params["p_syn_replace"] = args.p_syn_replace;
    params["p_syn_insert"] = args.p_syn_insert;
    params["p_swap"] = args.p_swap;
    params["p_delete"] = args.p_delete;
  } else if (kind == koin::TransformKind::kAeda) {
    params["insert_ratio"] = args.insert_ratio;
  }
  return params;
}

std::string output_basename(const std::string& transform,
                            koin::TransformKind kind, int trial, int trials) {
  std::string name = "augmented";
  if (transform == "all5") {
    name += "_";
    name += koin::transform_kind_name(kind);
  }
  if (trials > 1) name += "_t" + std::to_string(trial);
  return name + ".jsonl";
}

json run_config_json(const AugmentArgs& args, std::uint64_t seed) {
  // Deliberately excludes out_dir and jobs: neither may influence the
  // produced bytes, and the manifest must be identical across both.
  json config;
  config["subcommand"] = "augment";
  config["in"] = args.in_path;
  config["format"] = args.format;
  config["transform"] = args.transform;
  config["rate"] = args.rate;
  config["seed"] = seed;
  config["trials"] = args.trials;
  config["lexicon"] = args.lexicon_path;
  config["nli_fields"] = args.nli_fields;
  config["synonyms"] = args.synonyms_path;
  config["params"] = {
      {"p_syn_replace", args.p_syn_replace},
      {"p_syn_insert", args.p_syn_insert},
      {"p_swap", args.p_swap},
      {"p_delete", args.p_delete},
      {"insert_ratio", args.insert_ratio},
  };
  config["rewriter"] = {
      {"enabled", args.rewriter},
      {"config", args.rewriter_config_path},
  };
  return config;
}

AugmentArgs augment_args_from_run_config(const json& config) {
  AugmentArgs args;
  args.in_path = config.at("in").get<std::string>();
  args.format = config.at("format").get<std::string>();
  args.transform = config.at("transform").get<std::string>();
  args.rate = config.at("rate").get<double>();
  args.seed = config.at("seed").get<std::uint64_t>();
  args.trials = config.at("trials").get<int>();
  args.lexicon_path = config.at("lexicon").get<std::string>();
  args.nli_fields = config.at("nli_fields").get<std::string>();
  args.synonyms_path = config.at("synonyms").get<std::string>();
  const json& params = config.at("params");
  args.p_syn_replace = params.at("p_syn_replace").get<double>();
  args.p_syn_insert = params.at("p_syn_insert").get<double>();
  args.p_swap = params.at("p_swap").get<double>();
  args.p_delete = params.at("p_delete").get<double>();
  args.insert_ratio = params.at("insert_ratio").get<double>();
  const json& rewriter = config.at("rewriter");
  args.rewriter = rewriter.at("enabled").get<bool>();
  args.rewriter_config_path = rewriter.at("config").get<std::string>();
  return args;
}

int run_augment(const AugmentArgs& args) {
  const std::uint64_t seed = args.seed.has_value() ? *args.seed : entropy_seed();
  if (!args.seed.has_value()) {
    std::cerr << "note: no --seed given, using entropy seed " << seed << "\n";
  }

  const koin::Lexicon lexicon = load_lexicon(args.lexicon_path);
  const std::vector<koin::Record> records = koin::load_records(
      args.in_path, koin::input_format_from_name(args.format));

  koin::SynonymLexicon synonyms;
  koin::AugmentOptions options;
  options.nli_fields = koin::nli_fields_from_name(args.nli_fields);
  options.jobs = args.jobs;
  if (!args.synonyms_path.empty()) {
    synonyms = koin::load_synonyms_tsv(args.synonyms_path);
    options.synonyms = &synonyms;
  }

  koin::RewriterConfig rewriter_config;
  std::unique_ptr<koin::HttpChatClient> rewriter_client;
  std::map<std::string, std::size_t> rewrite_tallies;
  std::mutex tally_mutex;
  if (args.rewriter) {
    rewriter_config = args.rewriter_config_path.empty()
                          ? koin::RewriterConfig{}
                          : koin::rewriter_config_from_file(
                                args.rewriter_config_path);
    rewriter_client = std::make_unique<koin::HttpChatClient>(rewriter_config);
    options.reorder_hook = [&](const koin::Sentence& sentence,
                               std::uint64_t record_seed) {
      koin::RewriteOutcome outcome = koin::rewrite_order(
          sentence, rewriter_config, *rewriter_client, record_seed);
      {
        std::lock_guard<std::mutex> lock(tally_mutex);
        ++rewrite_tallies[std::string(
            koin::rewrite_status_name(outcome.status))];
      }
      return outcome.output;
    };
  }

  const std::vector<koin::TransformKind> kinds = resolve_kinds(args.transform);
  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir);

  koin::Manifest manifest;
  manifest.global_seed = seed;
  manifest.input_sha256 = koin::sha256_hex_of_file(args.in_path);
  manifest.tool_version = koin::kToolVersion;
  manifest.run_config = run_config_json(args, seed);

  koin::MixPlan base;
  base.rate = args.rate;
  base.global_seed = seed;
  std::size_t failures = 0;
  for (const koin::MixPlan& plan : koin::make_trials(base, args.trials)) {
    koin::TrialEntry entry;
    entry.trial_index = plan.trial_index;
    entry.seed = koin::effective_seed(seed, plan.trial_index);
    for (const koin::TransformKind kind : kinds) {
      koin::MixPlan kind_plan = plan;
      kind_plan.transform.kind = kind;
      kind_plan.transform.params = transform_params(args, kind);

      koin::AugmentStats stats;
      const std::vector<koin::Record> out_records = koin::build_augmented_set(
          records, kind_plan, lexicon, options, &stats);
      for (const std::string& warning : stats.warnings) {
        std::cerr << "warning: " << warning << "\n";
      }
      failures += stats.transform_failures;

      const std::string basename = output_basename(
          args.transform, kind, plan.trial_index, args.trials);
      const fs::path out_path = out_dir / basename;
      koin::write_records_jsonl(out_path.string(), out_records);
      note_written(out_path);
      entry.outputs.push_back(
          {basename, koin::sha256_hex_of_file(out_path.string())});
    }
    manifest.trials.push_back(std::move(entry));
  }

  write_text_file(out_dir / "manifest.json", koin::manifest_to_json(manifest));

  for (const auto& [status, count] : rewrite_tallies) {
    std::cerr << "rewriter " << status << ": " << count << "\n";
  }
  if (failures > 0) {
    std::cerr << "error: " << failures << " record(s) failed to transform\n";
    return kExitData;
  }
  return kExitOk;
}

// Re-executes the run configuration embedded in a manifest, then checks
// the fresh outputs against the recorded digests.
int run_replay(const std::string& manifest_path, const std::string& out_dir,
               unsigned jobs) {
  const koin::Manifest recorded =
      koin::manifest_from_json(read_text_file(manifest_path));
  AugmentArgs args = augment_args_from_run_config(recorded.run_config);
  args.out_dir = out_dir;
  args.jobs = jobs;
  const int status = run_augment(args);
  if (status != kExitOk) return status;

  std::size_t mismatches = 0;
  for (const koin::TrialEntry& trial : recorded.trials) {
    for (const koin::TrialOutput& output : trial.outputs) {
      const fs::path path = fs::path(out_dir) / output.file;
      const std::string digest = koin::sha256_hex_of_file(path.string());
      if (digest != output.sha256) {
        ++mismatches;
        std::cerr << "replay mismatch: " << output.file << "\n";
      }
    }
  }
  if (mismatches > 0) {
    std::cerr << "error: " << mismatches
              << " output(s) differ from the recorded digests\n";
    return kExitData;
  }
  std::cerr << "replay verified: all outputs match the recorded digests\n";
  return kExitOk;
}

// ---------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string in_path;
  std::string format = "generic_jsonl";  // record formats, text, pairs_tsv
  std::string restored_path;
  std::string lexicon_path;
  std::string out_dir;
};

// Sentence-bearing units of a record, keyed for pairing and reporting.
std::vector<std::pair<std::string, std::string>> record_units(
    const koin::Record& record) {
  std::vector<std::pair<std::string, std::string>> units;
  switch (record.task) {
    case koin::Task::kTc:
      units.emplace_back(record.id + "#title",
                         record.text_fields.at("title"));
      break;
    case koin::Task::kNli:
      units.emplace_back(record.id + "#premise",
                         record.text_fields.at("premise"));
      units.emplace_back(record.id + "#hypothesis",
                         record.text_fields.at("hypothesis"));
      break;
    case koin::Task::kDialogue:
      for (std::size_t i = 0; i < record.utterances.size(); ++i) {
        units.emplace_back(record.id + "#utt" + std::to_string(i),
                           record.utterances[i].text);
      }
      break;
  }
  return units;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string line =
        text.substr(pos, nl == std::string::npos ? text.size() - pos
                                                 : nl - pos);
    pos = nl == std::string::npos ? text.size() : nl + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

struct KeyedPair {
  std::string key;
  koin::SentencePair pair;
};

std::vector<KeyedPair> collect_pairs(const AnalyzeArgs& args) {
  std::vector<KeyedPair> pairs;
  if (args.format == "pairs_tsv") {
    const std::vector<std::string> lines = split_lines(read_text_file(args.in_path));
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty() || lines[i][0] == '#') continue;
      const std::size_t tab = lines[i].find('\t');
      if (tab == std::string::npos) {
        throw koin::ParseError("line " + std::to_string(i + 1) +
                               ": expected incomplete<TAB>restored");
      }
      KeyedPair entry;
      entry.key = "line" + std::to_string(i + 1);
      entry.pair.incomplete = koin::parse_sentence(lines[i].substr(0, tab));
      entry.pair.restored = koin::parse_sentence(lines[i].substr(tab + 1));
      pairs.push_back(std::move(entry));
    }
    return pairs;
  }
  if (args.format == "text") {
    const std::vector<std::string> lines = split_lines(read_text_file(args.in_path));
    std::vector<std::string> restored_lines;
    if (!args.restored_path.empty()) {
      restored_lines = split_lines(read_text_file(args.restored_path));
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      KeyedPair entry;
      entry.key = "line" + std::to_string(i + 1);
      entry.pair.incomplete = koin::parse_sentence(lines[i]);
      if (i < restored_lines.size() && !restored_lines[i].empty()) {
        entry.pair.restored = koin::parse_sentence(restored_lines[i]);
      }
      pairs.push_back(std::move(entry));
    }
    return pairs;
  }

  const koin::InputFormat format = koin::input_format_from_name(args.format);
  const std::vector<koin::Record> records =
      koin::load_records(args.in_path, format);
  std::map<std::string, std::map<std::string, std::string>> restored_units;
  if (!args.restored_path.empty()) {
    for (const koin::Record& record :
         koin::load_records(args.restored_path, format)) {
      for (auto& [key, text] : record_units(record)) {
        restored_units[record.id][key] = text;
      }
    }
  }
  for (const koin::Record& record : records) {
    const auto restored_it = restored_units.find(record.id);
    for (auto& [key, text] : record_units(record)) {
      KeyedPair entry;
      entry.key = key;
      entry.pair.incomplete = koin::parse_sentence(text);
      if (restored_it != restored_units.end()) {
        const auto unit_it = restored_it->second.find(key);
        if (unit_it != restored_it->second.end()) {
          entry.pair.restored = koin::parse_sentence(unit_it->second);
        }
      }
      pairs.push_back(std::move(entry));
    }
  }
  return pairs;
}

json report_to_json(const koin::IncompletenessReport& report) {
  const auto count_of = [&report](const char* name) {
    const auto it = report.category_counts.find(name);
    return it == report.category_counts.end() ? 0 : it->second;
  };
  const std::size_t aligned = count_of(koin::kCategoryMarkerOmitted) +
                              count_of(koin::kCategoryMarkerComplete);
  json obj;
  obj["sample_count"] = report.sample_count;
  obj["paired_count"] = report.paired_count;
  obj["marker_position_avg"] =
      report.paired_count > 0 ? json(report.marker_position_avg)
                              : json(nullptr);
  obj["marker_count_incomplete_avg"] =
      report.sample_count > 0 ? json(report.marker_count_incomplete_avg)
                              : json(nullptr);
  obj["omission_rate_avg"] =
      aligned > 0 ? json(report.omission_rate_avg) : json(nullptr);
  obj["correction_rate_avg"] =
      count_of(koin::kCategoryNonCanonicalOrder) > 0
          ? json(report.correction_rate_avg)
          : json(nullptr);
  json categories = json::object();
  for (const auto& [name, count] : report.category_counts) {
    categories[name] = count;
  }
  obj["category_counts"] = categories;
  // Human-only judgments stay out of the mechanical report.
  obj["human_only"] = json::array({"meaning_preserved"});
  return obj;
}

void print_report_table(const koin::IncompletenessReport& report) {
  const json obj = report_to_json(report);
  const auto cell = [&obj](const char* field) {
    const json& value = obj[field];
    if (value.is_null()) return std::string("n/a");
    if (value.is_number_float()) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", value.get<double>());
      return std::string(buf);
    }
    return value.dump();
  };
  std::cout << "sentences examined        " << report.sample_count << "\n";
  std::cout << "with restored reference   " << report.paired_count << "\n";
  std::cout << "case marker positions avg " << cell("marker_position_avg")
            << "\n";
  std::cout << "incomplete markers avg    "
            << cell("marker_count_incomplete_avg") << "\n";
  std::cout << "case marker omission avg  " << cell("omission_rate_avg")
            << "\n";
  std::cout << "word order correction avg " << cell("correction_rate_avg")
            << "\n";
  for (const auto& [name, count] : report.category_counts) {
    std::cout << name << std::string(26 - std::min<std::size_t>(25, name.size()),
                                     ' ')
              << count << "\n";
  }
}

int run_analyze(const AnalyzeArgs& args) {
  const koin::Lexicon lexicon = load_lexicon(args.lexicon_path);
  const std::vector<KeyedPair> keyed = collect_pairs(args);

  std::vector<koin::SentencePair> pairs;
  pairs.reserve(keyed.size());
  for (const KeyedPair& entry : keyed) pairs.push_back(entry.pair);
  const koin::IncompletenessReport report = koin::corpus_report(pairs, lexicon);

  print_report_table(report);

  if (!args.out_dir.empty()) {
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);
    write_text_file(out_dir / "report.json",
                    report_to_json(report).dump(2) + "\n");

    // Pairs whose stems disagree even as multisets — the report's
    // stem_mismatch rows — listed for manual inspection. Reordered pairs
    // also fail positional alignment but are word-order rows, not
    // mismatches.
    const auto sorted_stems = [&lexicon](const koin::Sentence& sentence) {
      std::vector<std::string> stems;
      for (const std::string& eojeol : sentence.eojeols) {
        stems.push_back(koin::detect_marker(eojeol, lexicon).stem);
      }
      std::sort(stems.begin(), stems.end());
      return stems;
    };
    std::string sidecar;
    for (const KeyedPair& entry : keyed) {
      if (!entry.pair.restored.has_value()) continue;
      try {
        koin::omission_rate(entry.pair.incomplete, *entry.pair.restored,
                            lexicon);
      } catch (const koin::StemMismatchError&) {
        if (sorted_stems(entry.pair.incomplete) !=
            sorted_stems(*entry.pair.restored)) {
          sidecar += json{{"key", entry.key}}.dump() + "\n";
        }
      }
    }
    write_text_file(out_dir / "stem_mismatch.jsonl", sidecar);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------
// sample / split / report

struct SampleArgs {
  std::string in_path;
  std::string format = "generic_jsonl";
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
};

int run_sample(const SampleArgs& args) {
  const std::uint64_t seed = args.seed.has_value() ? *args.seed : entropy_seed();
  if (!args.seed.has_value()) {
    std::cerr << "note: no --seed given, using entropy seed " << seed << "\n";
  }
  const std::vector<koin::Record> records = koin::load_records(
      args.in_path, koin::input_format_from_name(args.format));
  const std::vector<koin::Record> sampled =
      koin::stratified_sample(records, args.n, seed);
  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir);
  const fs::path out_path = out_dir / "sample.jsonl";
  koin::write_records_jsonl(out_path.string(), sampled);
  note_written(out_path);
  std::cerr << "sampled " << sampled.size() << " of " << records.size()
            << " records\n";
  return kExitOk;
}

struct SplitArgs {
  std::string in_path;
  std::string format = "generic_jsonl";
  double ratio = 0.9;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
};

int run_split(const SplitArgs& args) {
  const std::uint64_t seed = args.seed.has_value() ? *args.seed : entropy_seed();
  if (!args.seed.has_value()) {
    std::cerr << "note: no --seed given, using entropy seed " << seed << "\n";
  }
  const std::vector<koin::Record> records = koin::load_records(
      args.in_path, koin::input_format_from_name(args.format));
  const auto [train, val] = koin::split_train_val(records, args.ratio, seed);
  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir);
  const fs::path train_path = out_dir / "train.jsonl";
  const fs::path val_path = out_dir / "val.jsonl";
  koin::write_records_jsonl(train_path.string(), train);
  note_written(train_path);
  koin::write_records_jsonl(val_path.string(), val);
  note_written(val_path);
  std::cerr << "split " << records.size() << " records into " << train.size()
            << " train / " << val.size() << " val\n";
  return kExitOk;
}

struct ReportArgs {
  std::string in_path;
  std::string format = "generic_jsonl";
  std::string lexicon_path;
  std::string out_dir;
};

int run_report(const ReportArgs& args) {
  const koin::Lexicon lexicon = load_lexicon(args.lexicon_path);
  const std::vector<koin::Record> records = koin::load_records(
      args.in_path, koin::input_format_from_name(args.format));

  std::map<std::string, std::size_t> task_counts;
  std::map<std::string, std::size_t> label_counts;
  std::size_t unit_count = 0;
  std::size_t eojeol_count = 0;
  std::size_t marker_count = 0;
  std::size_t augmented_count = 0;
  for (const koin::Record& record : records) {
    ++task_counts[std::string(koin::task_name(record.task))];
    if (record.label.has_value()) ++label_counts[*record.label];
    if (record.provenance.has_value()) ++augmented_count;
    for (const auto& [key, text] : record_units(record)) {
      (void)key;
      const koin::Sentence sentence = koin::parse_sentence(text);
      ++unit_count;
      eojeol_count += sentence.eojeols.size();
      for (const std::string& eojeol : sentence.eojeols) {
        if (koin::detect_marker(eojeol, lexicon).has_marker()) {
          ++marker_count;
        }
      }
    }
  }

  json obj;
  obj["record_count"] = records.size();
  obj["augmented_count"] = augmented_count;
  obj["task_counts"] = task_counts;
  obj["label_counts"] = label_counts;
  obj["sentence_count"] = unit_count;
  obj["eojeols_per_sentence_avg"] =
      unit_count > 0
          ? json(static_cast<double>(eojeol_count) /
                 static_cast<double>(unit_count))
          : json(nullptr);
  obj["markers_per_sentence_avg"] =
      unit_count > 0
          ? json(static_cast<double>(marker_count) /
                 static_cast<double>(unit_count))
          : json(nullptr);

  std::cout << obj.dump(2) << "\n";
  if (!args.out_dir.empty()) {
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);
    write_text_file(out_dir / "dataset_report.json", obj.dump(2) + "\n");
  }
  return kExitOk;
}

int classify_error(const koin::Error& e) {
  if (dynamic_cast<const koin::TransportError*>(&e) != nullptr) {
    return kExitTransport;
  }
  if (dynamic_cast<const koin::ConfigError*>(&e) != nullptr ||
      dynamic_cast<const koin::BadParamsError*>(&e) != nullptr ||
      dynamic_cast<const koin::BadRatioError*>(&e) != nullptr) {
    return kExitUsage;
  }
  return kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic Korean incompleteness dataset tool"};
  app.require_subcommand(1);

  AugmentArgs augment;
  CLI::App* cmd_augment = app.add_subcommand(
      "augment",
      "construct incomplete variants and blend them with the originals");
  cmd_augment->add_option("--in", augment.in_path, "input dataset path");
  cmd_augment->add_option(
      "--format", augment.format,
      "input format: generic_jsonl, klue_tc_json, klue_nli_json, "
      "aihub_dialogue_json");
  cmd_augment->add_option(
      "--transform", augment.transform,
      "cm_del, shuf_sem_presrv, shuf_sem_presrv_cm_del, shuf_sem_non_presrv, "
      "shuf_sem_non_presrv_cm_del, duplicate, repetition, eda, aeda, or all5");
  cmd_augment->add_option("--rate", augment.rate,
                          "augmented fraction of the base set, in [0, 1]");
  cmd_augment->add_option("--seed", augment.seed,
                          "global seed; omitted: entropy seed, recorded in "
                          "the manifest");
  cmd_augment->add_option("--trials", augment.trials,
                          "independent repetitions, each with a derived seed");
  cmd_augment->add_option("--lexicon", augment.lexicon_path,
                          "marker lexicon TSV overriding the built-in one");
  cmd_augment->add_option("--out", augment.out_dir, "output directory");
  cmd_augment->add_option("--nli-fields", augment.nli_fields,
                          "premise, hypothesis, or both");
  cmd_augment->add_option("--jobs", augment.jobs,
                          "worker threads; never changes the output bytes");
  cmd_augment->add_option("--synonyms", augment.synonyms_path,
                          "synonym TSV for the eda transform");
  cmd_augment->add_option("--p-syn-replace", augment.p_syn_replace,
                          "eda synonym replacement probability");
  cmd_augment->add_option("--p-syn-insert", augment.p_syn_insert,
                          "eda synonym insertion probability");
  cmd_augment->add_option("--p-swap", augment.p_swap,
                          "eda swap probability");
  cmd_augment->add_option("--p-delete", augment.p_delete,
                          "eda deletion probability");
  cmd_augment->add_option("--insert-ratio", augment.insert_ratio,
                          "aeda punctuation insertions per word");
  cmd_augment->add_flag("--rewriter", augment.rewriter,
                        "reorder via the chat endpoint instead of the rule");
  cmd_augment->add_option("--rewriter-config", augment.rewriter_config_path,
                          "rewriter JSON config path");
  cmd_augment->add_option("--replay", augment.replay_manifest,
                          "re-run the run_config of this manifest and verify "
                          "the recorded digests");

  AnalyzeArgs analyze;
  CLI::App* cmd_analyze = app.add_subcommand(
      "analyze", "measure incompleteness rates against restored references");
  cmd_analyze->add_option("--in", analyze.in_path, "input path")->required();
  cmd_analyze->add_option(
      "--format", analyze.format,
      "generic_jsonl, klue_tc_json, klue_nli_json, aihub_dialogue_json, "
      "text (one sentence per line), or pairs_tsv (incomplete<TAB>restored)");
  cmd_analyze->add_option("--restored", analyze.restored_path,
                          "restored-reference file paired by id (or by line "
                          "for text format)");
  cmd_analyze->add_option("--lexicon", analyze.lexicon_path,
                          "marker lexicon TSV overriding the built-in one");
  cmd_analyze->add_option("--out", analyze.out_dir,
                          "directory for report.json and stem_mismatch.jsonl");

  SampleArgs sample;
  CLI::App* cmd_sample = app.add_subcommand(
      "sample", "stratified sample preserving the label distribution");
  cmd_sample->add_option("--in", sample.in_path, "input path")->required();
  cmd_sample->add_option("--format", sample.format, "input format");
  cmd_sample->add_option("--n", sample.n, "sample size")->required();
  cmd_sample->add_option("--seed", sample.seed, "sampling seed");
  cmd_sample->add_option("--out", sample.out_dir, "output directory");

  SplitArgs split;
  CLI::App* cmd_split =
      app.add_subcommand("split", "shuffled train/validation partition");
  cmd_split->add_option("--in", split.in_path, "input path")->required();
  cmd_split->add_option("--format", split.format, "input format");
  cmd_split->add_option("--ratio", split.ratio,
                        "train fraction, strictly between 0 and 1");
  cmd_split->add_option("--seed", split.seed, "shuffle seed");
  cmd_split->add_option("--out", split.out_dir, "output directory");

  ReportArgs report;
  CLI::App* cmd_report =
      app.add_subcommand("report", "dataset summary statistics");
  cmd_report->add_option("--in", report.in_path, "input path")->required();
  cmd_report->add_option("--format", report.format, "input format");
  cmd_report->add_option("--lexicon", report.lexicon_path,
                         "marker lexicon TSV overriding the built-in one");
  cmd_report->add_option("--out", report.out_dir,
                         "directory for dataset_report.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_augment->parsed()) {
      if (!augment.replay_manifest.empty()) {
        return run_replay(augment.replay_manifest, augment.out_dir,
                          augment.jobs);
      }
      if (augment.in_path.empty()) {
        std::cerr << "error: --in is required (or --replay)\n";
        return kExitUsage;
      }
      return run_augment(augment);
    }
    if (cmd_analyze->parsed()) return run_analyze(analyze);
    if (cmd_sample->parsed()) return run_sample(sample);
    if (cmd_split->parsed()) return run_split(split);
    if (cmd_report->parsed()) return run_report(report);
  } catch (const koin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    remove_written_files();
    return classify_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    remove_written_files();
    return kExitData;
  }
  return kExitUsage;
}
