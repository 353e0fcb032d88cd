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

#include "koin/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "json_util.hpp"
#include "koin/errors.hpp"
#include "koin/rng.hpp"
#include "parallel.hpp"

namespace koin {

namespace {

using nlohmann::json;
using detail::require_field;
using detail::require_string;
using detail::stringify_scalar;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string position_id(const char* prefix, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%06zu", prefix, index);
  return buf;
}

json parse_json_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad JSON document: ") + e.what());
  }
}

std::vector<Record> parse_klue_tc(std::string_view text) {
  const json doc = parse_json_document(text);
  if (!doc.is_array()) throw ParseError("expected a top-level JSON array");
  std::vector<Record> records;
  records.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    if (!item.is_object()) {
      throw ParseError("element " + std::to_string(i) + " is not an object");
    }
    Record record;
    record.task = Task::kTc;
    record.id = item.contains("guid") && item["guid"].is_string()
                    ? item["guid"].get<std::string>()
                    : position_id("tc", i);
    record.text_fields["title"] = require_string(item, "title");
    if (const auto it = item.find("label");
        it != item.end() && !it->is_null()) {
      record.label = stringify_scalar(*it);
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<Record> parse_klue_nli(std::string_view text) {
  const json doc = parse_json_document(text);
  if (!doc.is_array()) throw ParseError("expected a top-level JSON array");
  std::vector<Record> records;
  records.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    if (!item.is_object()) {
      throw ParseError("element " + std::to_string(i) + " is not an object");
    }
    Record record;
    record.task = Task::kNli;
    record.id = item.contains("guid") && item["guid"].is_string()
                    ? item["guid"].get<std::string>()
                    : position_id("nli", i);
    record.text_fields["premise"] = require_string(item, "premise");
    record.text_fields["hypothesis"] = require_string(item, "hypothesis");
    if (const auto it = item.find("gold_label");
        it != item.end() && !it->is_null()) {
      record.label = stringify_scalar(*it);
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<Record> parse_aihub_dialogue(std::string_view text) {
  const json doc = parse_json_document(text);
  if (!doc.is_object()) throw ParseError("expected a top-level JSON object");
  const json& data = require_field(doc, "data");
  if (!data.is_array()) throw SchemaError("data");

  std::vector<Record> records;
  records.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const json& item = data[i];
    if (!item.is_object()) {
      throw ParseError("data element " + std::to_string(i) +
                       " is not an object");
    }
    Record record;
    record.task = Task::kDialogue;
    record.id = position_id("dlg", i);
    if (item.contains("header") && item["header"].is_object()) {
      const json& header = item["header"];
      if (header.contains("dialogueInfo") &&
          header["dialogueInfo"].is_object() &&
          header["dialogueInfo"].contains("dialogueID") &&
          header["dialogueInfo"]["dialogueID"].is_string()) {
        record.id = header["dialogueInfo"]["dialogueID"].get<std::string>();
      }
    }
    const json& body = require_field(item, "body");
    if (!body.is_object()) throw SchemaError("body");
    const json& dialogue = require_field(body, "dialogue");
    if (!dialogue.is_array()) throw SchemaError("dialogue");
    for (const json& turn : dialogue) {
      Utterance utterance;
      utterance.speaker = require_string(turn, "participantID");
      utterance.text = require_string(turn, "utterance");
      record.utterances.push_back(std::move(utterance));
    }
    if (const auto it = body.find("summary");
        it != body.end() && it->is_string()) {
      record.label = it->get<std::string>();
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<Record> parse_generic_jsonl(std::string_view text) {
  std::vector<Record> records;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    try {
      const json obj = json::parse(line);
      if (!obj.is_object()) throw ParseError("line is not a JSON object");
      if (obj.contains("task") && obj.contains("fields")) {
        records.push_back(record_from_json_line(line));
        continue;
      }
      Record record;
      record.task = Task::kTc;
      record.id = obj.contains("id") && obj["id"].is_string()
                      ? obj["id"].get<std::string>()
                      : position_id("rec", records.size());
      record.text_fields["title"] = require_string(obj, "text");
      if (const auto it = obj.find("label");
          it != obj.end() && !it->is_null()) {
        record.label = stringify_scalar(*it);
      }
      records.push_back(std::move(record));
    } catch (const json::parse_error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      if (dynamic_cast<const SchemaError*>(&e) != nullptr) throw;
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

// Uniform pick without replacement: shuffle the index range, keep the
// first `want`, restore ascending order.
std::vector<std::size_t> uniform_pick(std::size_t total, std::size_t want,
                                      std::uint64_t seed) {
  std::vector<std::size_t> indices(total);
  for (std::size_t i = 0; i < total; ++i) indices[i] = i;
  Rng rng(seed);
  rng.shuffle(indices);
  indices.resize(want);
  std::sort(indices.begin(), indices.end());
  return indices;
}

// labels[i] is the label of sorted record i. Returns ascending indices.
std::vector<std::size_t> stratified_pick(const std::vector<std::string>& labels,
                                         std::size_t want,
                                         std::uint64_t seed) {
  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    members[labels[i]].push_back(i);
  }
  std::vector<std::pair<std::string, std::size_t>> counts;
  counts.reserve(members.size());
  for (const auto& [label, idx] : members) counts.emplace_back(label, idx.size());

  const auto quota = apportion_by_label(counts, want);
  Rng rng(seed);
  std::vector<std::size_t> picked;
  picked.reserve(want);
  for (const auto& [label, count] : quota) {
    std::vector<std::size_t> pool = members[label];
    rng.shuffle(pool);
    pool.resize(count);
    picked.insert(picked.end(), pool.begin(), pool.end());
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<std::size_t> sorted_order_by_id(const std::vector<Record>& records) {
  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&records](std::size_t a, std::size_t b) {
                     return records[a].id < records[b].id;
                   });
  return order;
}

bool is_presrv_reorder(TransformKind kind) {
  return kind == TransformKind::kShufSemPresrv ||
         kind == TransformKind::kShufSemPresrvCmDel;
}

std::string transform_text(const std::string& text, const TransformSpec& spec,
                           std::uint64_t field_seed, const Lexicon& lexicon,
                           const AugmentOptions& options,
                           std::vector<std::string>* warnings) {
  const Sentence input = parse_sentence(text);
  Sentence output;
  if (options.reorder_hook && is_presrv_reorder(spec.kind)) {
    const Sentence reordered = options.reorder_hook(input, field_seed);
    output = spec.kind == TransformKind::kShufSemPresrvCmDel
                 ? cm_del(reordered, lexicon)
                 : reordered;
  } else {
    TransformSpec field_spec = spec;
    field_spec.seed = field_seed;
    output = apply_transform(input, field_spec, lexicon, options.synonyms,
                             warnings);
  }
  return render_sentence(output);
}

}  // namespace

std::string_view input_format_name(InputFormat format) {
  switch (format) {
    case InputFormat::kKlueTcJson:
      return "klue_tc_json";
    case InputFormat::kKlueNliJson:
      return "klue_nli_json";
    case InputFormat::kAihubDialogueJson:
      return "aihub_dialogue_json";
    case InputFormat::kGenericJsonl:
      return "generic_jsonl";
  }
  return "unknown";
}

InputFormat input_format_from_name(std::string_view name) {
  if (name == "klue_tc_json") return InputFormat::kKlueTcJson;
  if (name == "klue_nli_json") return InputFormat::kKlueNliJson;
  if (name == "aihub_dialogue_json") return InputFormat::kAihubDialogueJson;
  if (name == "generic_jsonl") return InputFormat::kGenericJsonl;
  throw BadParamsError("unknown input format: " + std::string(name));
}

std::vector<Record> parse_records(std::string_view text, InputFormat format) {
  switch (format) {
    case InputFormat::kKlueTcJson:
      return parse_klue_tc(text);
    case InputFormat::kKlueNliJson:
      return parse_klue_nli(text);
    case InputFormat::kAihubDialogueJson:
      return parse_aihub_dialogue(text);
    case InputFormat::kGenericJsonl:
      return parse_generic_jsonl(text);
  }
  throw BadParamsError("unhandled input format");
}

std::vector<Record> load_records(const std::string& path, InputFormat format) {
  return parse_records(read_file(path), format);
}

std::vector<Record> read_records_jsonl(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<Record> records;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        std::string_view(text).substr(
            pos, nl == std::string::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json_line(line));
    } catch (const Error& e) {
      throw ParseError(path + " line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return records;
}

void write_records_jsonl(const std::string& path,
                         const std::vector<Record>& records) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + tmp);
    for (const Record& record : records) {
      out << record_to_json_line(record) << '\n';
    }
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw IoError("write failed: " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot move output into place: " + path + ": " +
                  ec.message());
  }
}

std::string_view nli_fields_name(NliFields mode) {
  switch (mode) {
    case NliFields::kPremise:
      return "premise";
    case NliFields::kHypothesis:
      return "hypothesis";
    case NliFields::kBoth:
      return "both";
  }
  return "unknown";
}

NliFields nli_fields_from_name(std::string_view name) {
  if (name == "premise") return NliFields::kPremise;
  if (name == "hypothesis") return NliFields::kHypothesis;
  if (name == "both") return NliFields::kBoth;
  throw BadParamsError("unknown nli-fields mode: " + std::string(name));
}

std::int64_t round_half_away(double x) { return std::llround(x); }

std::uint64_t effective_seed(std::uint64_t global_seed, int trial_index) {
  if (trial_index == 0) return global_seed;
  return derive_seed(global_seed, static_cast<std::uint64_t>(trial_index));
}

std::vector<MixPlan> make_trials(const MixPlan& base, int k) {
  if (k < 1) throw BadParamsError("trial count must be >= 1");
  std::vector<MixPlan> plans;
  plans.reserve(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) {
    MixPlan plan = base;
    plan.trial_index = t;
    plans.push_back(std::move(plan));
  }
  return plans;
}

std::vector<std::pair<std::string, std::size_t>> apportion_by_label(
    const std::vector<std::pair<std::string, std::size_t>>& class_counts,
    std::size_t n) {
  std::uint64_t total = 0;
  for (const auto& [label, count] : class_counts) total += count;
  if (n > total) {
    throw TooFewError("requested " + std::to_string(n) + " from " +
                      std::to_string(total) + " records");
  }
  if (total == 0) return {};

  struct Share {
    std::size_t index;
    std::uint64_t remainder;
  };
  std::vector<std::pair<std::string, std::size_t>> result;
  result.reserve(class_counts.size());
  std::vector<Share> shares;
  shares.reserve(class_counts.size());
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < class_counts.size(); ++i) {
    const std::uint64_t product =
        static_cast<std::uint64_t>(n) * class_counts[i].second;
    const std::uint64_t floor_share = product / total;
    result.emplace_back(class_counts[i].first,
                        static_cast<std::size_t>(floor_share));
    shares.push_back({i, product % total});
    assigned += floor_share;
  }

  std::sort(shares.begin(), shares.end(),
            [&class_counts](const Share& a, const Share& b) {
              if (a.remainder != b.remainder) return a.remainder > b.remainder;
              return class_counts[a.index].first < class_counts[b.index].first;
            });
  for (std::uint64_t left = n - assigned, i = 0; left > 0; --left, ++i) {
    ++result[shares[i].index].second;
  }
  return result;
}

std::vector<Record> stratified_sample(const std::vector<Record>& records,
                                      std::size_t n, std::uint64_t seed) {
  if (n > records.size()) {
    throw TooFewError("cannot sample " + std::to_string(n) + " from " +
                      std::to_string(records.size()) + " records");
  }
  const std::vector<std::size_t> order = sorted_order_by_id(records);
  std::vector<std::string> labels;
  labels.reserve(records.size());
  for (const std::size_t idx : order) {
    const Record& record = records[idx];
    if (!record.label.has_value()) {
      throw UnlabeledError("record " + record.id +
                           " has no label; stratified sampling needs one");
    }
    labels.push_back(*record.label);
  }
  const std::vector<std::size_t> picked = stratified_pick(labels, n, seed);
  std::vector<Record> out;
  out.reserve(picked.size());
  for (const std::size_t sorted_idx : picked) {
    out.push_back(records[order[sorted_idx]]);
  }
  return out;
}

std::pair<std::vector<Record>, std::vector<Record>> split_train_val(
    const std::vector<Record>& records, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw BadRatioError("split ratio must be strictly between 0 and 1");
  }
  const std::vector<std::size_t> order = sorted_order_by_id(records);
  std::vector<std::size_t> shuffled = order;
  Rng rng(seed);
  rng.shuffle(shuffled);

  const auto train_count = static_cast<std::size_t>(
      round_half_away(ratio * static_cast<double>(records.size())));
  std::vector<std::size_t> train_idx(shuffled.begin(),
                                     shuffled.begin() + static_cast<std::ptrdiff_t>(
                                                            train_count));
  std::vector<std::size_t> val_idx(
      shuffled.begin() + static_cast<std::ptrdiff_t>(train_count),
      shuffled.end());

  const auto by_id = [&records](std::size_t a, std::size_t b) {
    return records[a].id < records[b].id;
  };
  std::sort(train_idx.begin(), train_idx.end(), by_id);
  std::sort(val_idx.begin(), val_idx.end(), by_id);

  std::pair<std::vector<Record>, std::vector<Record>> out;
  out.first.reserve(train_idx.size());
  out.second.reserve(val_idx.size());
  for (const std::size_t i : train_idx) out.first.push_back(records[i]);
  for (const std::size_t i : val_idx) out.second.push_back(records[i]);
  return out;
}

Record transform_record(const Record& parent, const TransformSpec& spec,
                        const Lexicon& lexicon, const AugmentOptions& options,
                        std::vector<std::string>* warnings) {
  Record child;
  child.id = parent.id + "-" + std::string(transform_kind_name(spec.kind));
  child.task = parent.task;
  child.label = parent.label;
  Provenance prov;
  prov.kind = std::string(transform_kind_name(spec.kind));
  prov.seed = spec.seed;
  prov.parent_id = parent.id;
  child.provenance = std::move(prov);

  if (spec.kind == TransformKind::kDuplicate) {
    child.text_fields = parent.text_fields;
    child.utterances = parent.utterances;
    return child;
  }

  switch (parent.task) {
    case Task::kTc: {
      const auto it = parent.text_fields.find("title");
      if (it == parent.text_fields.end()) throw SchemaError("title");
      child.text_fields = parent.text_fields;
      child.text_fields["title"] =
          transform_text(it->second, spec, spec.seed, lexicon, options,
                         warnings);
      break;
    }
    case Task::kNli: {
      const auto premise = parent.text_fields.find("premise");
      const auto hypothesis = parent.text_fields.find("hypothesis");
      if (premise == parent.text_fields.end()) throw SchemaError("premise");
      if (hypothesis == parent.text_fields.end()) {
        throw SchemaError("hypothesis");
      }
      child.text_fields = parent.text_fields;
      if (options.nli_fields != NliFields::kHypothesis) {
        child.text_fields["premise"] =
            transform_text(premise->second, spec,
                           derive_seed(spec.seed, kPremiseSalt), lexicon,
                           options, warnings);
      }
      if (options.nli_fields != NliFields::kPremise) {
        child.text_fields["hypothesis"] =
            transform_text(hypothesis->second, spec,
                           derive_seed(spec.seed, kHypothesisSalt), lexicon,
                           options, warnings);
      }
      break;
    }
    case Task::kDialogue: {
      child.text_fields = parent.text_fields;
      child.utterances.reserve(parent.utterances.size());
      for (std::size_t i = 0; i < parent.utterances.size(); ++i) {
        Utterance utterance = parent.utterances[i];
        utterance.text = transform_text(
            utterance.text, spec,
            derive_seed(spec.seed, static_cast<std::uint64_t>(i)), lexicon,
            options, warnings);
        child.utterances.push_back(std::move(utterance));
      }
      break;
    }
  }
  return child;
}

std::vector<Record> build_augmented_set(const std::vector<Record>& records,
                                        const MixPlan& plan,
                                        const Lexicon& lexicon,
                                        const AugmentOptions& options,
                                        AugmentStats* stats) {
  if (!(plan.rate >= 0.0 && plan.rate <= 1.0)) {
    throw BadParamsError("augmentation rate must be in [0, 1]");
  }
  const std::size_t n = records.size();
  const auto want = static_cast<std::size_t>(
      round_half_away(plan.rate * static_cast<double>(n)));
  const std::uint64_t eff = effective_seed(plan.global_seed, plan.trial_index);
  const std::vector<std::size_t> order = sorted_order_by_id(records);

  // Parent choice: everything at full rate; otherwise a stratified or
  // uniform pick over the sorted order, under a stream separate from
  // the per-record seeds.
  std::vector<std::size_t> parent_positions;  // positions in `order`
  if (want >= n) {
    parent_positions.resize(n);
    for (std::size_t i = 0; i < n; ++i) parent_positions[i] = i;
  } else if (want > 0) {
    const std::uint64_t sample_seed = derive_seed(eff, kSampleSalt);
    const bool all_labeled =
        std::all_of(records.begin(), records.end(),
                    [](const Record& r) { return r.label.has_value(); });
    if (all_labeled) {
      std::vector<std::string> labels;
      labels.reserve(n);
      for (const std::size_t idx : order) labels.push_back(*records[idx].label);
      parent_positions = stratified_pick(labels, want, sample_seed);
    } else {
      parent_positions = uniform_pick(n, want, sample_seed);
    }
  }

  std::vector<std::optional<Record>> children(parent_positions.size());
  std::vector<std::vector<std::string>> slot_warnings(parent_positions.size());
  detail::run_parallel(
      parent_positions.size(), options.jobs, [&](std::size_t slot) {
        const std::size_t position = parent_positions[slot];
        const Record& parent = records[order[position]];
        TransformSpec spec = plan.transform;
        spec.seed = derive_seed(eff, static_cast<std::uint64_t>(position));
        try {
          children[slot] = transform_record(parent, spec, lexicon, options,
                                            &slot_warnings[slot]);
        } catch (const Error& e) {
          slot_warnings[slot].push_back("record " + parent.id +
                                        ": transform failed: " + e.what());
          children[slot] = std::nullopt;
        }
      });

  std::vector<Record> out;
  out.reserve(n + parent_positions.size());
  for (const std::size_t idx : order) out.push_back(records[idx]);
  std::size_t failures = 0;
  for (std::size_t slot = 0; slot < children.size(); ++slot) {
    if (children[slot].has_value()) {
      out.push_back(std::move(*children[slot]));
    } else {
      ++failures;
    }
    if (stats != nullptr) {
      stats->warnings.insert(stats->warnings.end(),
                             slot_warnings[slot].begin(),
                             slot_warnings[slot].end());
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Record& a, const Record& b) { return a.id < b.id; });

  if (stats != nullptr) {
    stats->original_count = n;
    stats->child_count = children.size() - failures;
    stats->transform_failures = failures;
  }
  return out;
}

std::string manifest_to_json(const Manifest& manifest) {
  json obj;
  obj["global_seed"] = manifest.global_seed;
  obj["input_sha256"] = manifest.input_sha256;
  obj["tool_version"] = manifest.tool_version;
  obj["run_config"] =
      manifest.run_config.is_null() ? json::object() : manifest.run_config;
  json trials = json::array();
  for (const TrialEntry& trial : manifest.trials) {
    json outputs = json::array();
    for (const TrialOutput& output : trial.outputs) {
      outputs.push_back(
          json{{"file", output.file}, {"sha256", output.sha256}});
    }
    trials.push_back(json{{"outputs", std::move(outputs)},
                          {"seed", trial.seed},
                          {"trial_index", trial.trial_index}});
  }
  obj["trials"] = std::move(trials);
  return obj.dump(2) + "\n";
}

Manifest manifest_from_json(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad manifest JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError("manifest is not a JSON object");

  Manifest manifest;
  const json& seed = require_field(obj, "global_seed");
  if (!seed.is_number_unsigned()) throw SchemaError("global_seed");
  manifest.global_seed = seed.get<std::uint64_t>();
  manifest.input_sha256 = require_string(obj, "input_sha256");
  manifest.tool_version = require_string(obj, "tool_version");
  manifest.run_config = require_field(obj, "run_config");
  const json& trials = require_field(obj, "trials");
  if (!trials.is_array()) throw SchemaError("trials");
  for (const json& trial : trials) {
    TrialEntry entry;
    const json& index = require_field(trial, "trial_index");
    if (!index.is_number_integer()) throw SchemaError("trial_index");
    entry.trial_index = index.get<int>();
    const json& trial_seed = require_field(trial, "seed");
    if (!trial_seed.is_number_unsigned()) throw SchemaError("seed");
    entry.seed = trial_seed.get<std::uint64_t>();
    const json& outputs = require_field(trial, "outputs");
    if (!outputs.is_array()) throw SchemaError("outputs");
    for (const json& output : outputs) {
      TrialOutput to;
      to.file = require_string(output, "file");
      to.sha256 = require_string(output, "sha256");
      entry.outputs.push_back(std::move(to));
    }
    manifest.trials.push_back(std::move(entry));
  }
  return manifest;
}

}  // namespace koin
