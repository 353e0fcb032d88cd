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

#ifndef KOIN_SRC_JSON_UTIL_HPP_
#define KOIN_SRC_JSON_UTIL_HPP_

#include <string>

#include <json.hpp>

#include "koin/errors.hpp"

namespace koin {
namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj,
                                           const std::string& field) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) throw SchemaError(field);
  return *it;
}

inline std::string require_string(const nlohmann::json& obj,
                                  const std::string& field) {
  const nlohmann::json& value = require_field(obj, field);
  if (!value.is_string()) throw SchemaError(field);
  return value.get<std::string>();
}

// Labels may arrive as strings or numbers; numbers keep their JSON
// spelling.
inline std::string stringify_scalar(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace detail
}  // namespace koin

#endif  // KOIN_SRC_JSON_UTIL_HPP_
