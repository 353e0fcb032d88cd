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

#ifndef KOIN_DIGEST_HPP_
#define KOIN_DIGEST_HPP_

#include <string>
#include <string_view>

namespace koin {

// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

// Lowercase hex SHA-256 of a file's contents. Throws IoError.
std::string sha256_hex_of_file(const std::string& path);

}  // namespace koin

#endif  // KOIN_DIGEST_HPP_
