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

#ifndef KOIN_RECORD_HPP_
#define KOIN_RECORD_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace koin {

enum class Task { kTc, kNli, kDialogue };

std::string_view task_name(Task task);
// Throws ParseError on an unrecognized name.
Task task_from_name(std::string_view name);

struct Utterance {
  std::string speaker;
  std::string text;

  bool operator==(const Utterance&) const = default;
};

struct Provenance {
  std::string kind;  // transform kind name
  std::uint64_t seed = 0;
  std::string parent_id;

  bool operator==(const Provenance&) const = default;
};

// One dataset instance. The task decides which fields carry text:
// tc uses text_fields["title"], nli uses text_fields["premise"] and
// text_fields["hypothesis"], dialogue uses the utterance list.
// Augmented records always carry provenance; originals never do.
struct Record {
  std::string id;
  Task task = Task::kTc;
  std::map<std::string, std::string> text_fields;
  std::vector<Utterance> utterances;  // dialogue only
  std::optional<std::string> label;
  std::optional<Provenance> provenance;

  bool operator==(const Record&) const = default;
};

// One compact JSON object with alphabetically ordered keys, so equal
// records always serialize to equal bytes.
std::string record_to_json_line(const Record& record);

// Inverse of record_to_json_line. Throws ParseError / SchemaError.
Record record_from_json_line(std::string_view line);

}  // namespace koin

#endif  // KOIN_RECORD_HPP_
