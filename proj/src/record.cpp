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

#include "koin/record.hpp"

#include <json.hpp>

#include "koin/errors.hpp"

namespace koin {

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) throw SchemaError(field);
  return *it;
}

std::string require_string(const json& obj, const char* field) {
  const json& value = require_field(obj, field);
  if (!value.is_string()) throw SchemaError(field);
  return value.get<std::string>();
}

}  // namespace

std::string_view task_name(Task task) {
  switch (task) {
    case Task::kTc:
      return "tc";
    case Task::kNli:
      return "nli";
    case Task::kDialogue:
      return "dialogue";
  }
  return "unknown";
}

Task task_from_name(std::string_view name) {
  if (name == "tc") return Task::kTc;
  if (name == "nli") return Task::kNli;
  if (name == "dialogue") return Task::kDialogue;
  throw ParseError("unknown task: " + std::string(name));
}

std::string record_to_json_line(const Record& record) {
  json obj;
  obj["id"] = record.id;
  obj["task"] = std::string(task_name(record.task));
  json fields = json::object();
  for (const auto& [name, text] : record.text_fields) {
    fields[name] = text;
  }
  if (record.task == Task::kDialogue) {
    json utts = json::array();
    for (const Utterance& u : record.utterances) {
      utts.push_back(json{{"speaker", u.speaker}, {"text", u.text}});
    }
    fields["utterances"] = std::move(utts);
  }
  obj["fields"] = std::move(fields);
  if (record.label.has_value()) obj["label"] = *record.label;
  if (record.provenance.has_value()) {
    obj["provenance"] = json{{"kind", record.provenance->kind},
                             {"parent_id", record.provenance->parent_id},
                             {"seed", record.provenance->seed}};
  }
  return obj.dump();
}

Record record_from_json_line(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad record JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError("record line is not a JSON object");

  Record record;
  record.id = require_string(obj, "id");
  record.task = task_from_name(require_string(obj, "task"));
  const json& fields = require_field(obj, "fields");
  if (!fields.is_object()) throw SchemaError("fields");

  if (record.task == Task::kDialogue) {
    const json& utts = require_field(fields, "utterances");
    if (!utts.is_array()) throw SchemaError("utterances");
    for (const json& u : utts) {
      Utterance utterance;
      utterance.speaker = require_string(u, "speaker");
      utterance.text = require_string(u, "text");
      record.utterances.push_back(std::move(utterance));
    }
  } else {
    for (const auto& [name, value] : fields.items()) {
      if (!value.is_string()) throw SchemaError(name);
      record.text_fields[name] = value.get<std::string>();
    }
    if (record.task == Task::kTc) require_field(fields, "title");
    if (record.task == Task::kNli) {
      require_field(fields, "premise");
      require_field(fields, "hypothesis");
    }
  }

  if (const auto it = obj.find("label"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) throw SchemaError("label");
    record.label = it->get<std::string>();
  }
  if (const auto it = obj.find("provenance");
      it != obj.end() && !it->is_null()) {
    Provenance prov;
    prov.kind = require_string(*it, "kind");
    prov.parent_id = require_string(*it, "parent_id");
    const json& seed = require_field(*it, "seed");
    if (!seed.is_number_unsigned()) throw SchemaError("seed");
    prov.seed = seed.get<std::uint64_t>();
    record.provenance = std::move(prov);
  }
  return record;
}

}  // namespace koin
