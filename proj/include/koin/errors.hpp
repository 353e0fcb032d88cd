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

#ifndef KOIN_ERRORS_HPP_
#define KOIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace koin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A code point outside the precomposed Hangul syllable block where one
// was required.
class NotHangulError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// No lexicon entry carries the requested role.
class UnknownRoleError : public Error {
 public:
  using Error::Error;
};

class BadParamsError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; the message carries line/offset context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input missing a required field.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& field)
      : Error("missing required field: " + field), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class UnlabeledError : public Error {
 public:
  using Error::Error;
};

class TooFewError : public Error {
 public:
  using Error::Error;
};

class BadRatioError : public Error {
 public:
  using Error::Error;
};

// The two sides of an omission-rate comparison do not share a stem
// sequence, so marker positions cannot be paired.
class StemMismatchError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace koin

#endif  // KOIN_ERRORS_HPP_
