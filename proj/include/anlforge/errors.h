// Copyright 2026 The anlforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANLFORGE_ERRORS_H_
#define ANLFORGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace anlforge {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graph or record breaks one of its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A label is not part of the active label schema, or a schema is malformed.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Character offsets or records cannot be aligned to each other.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// A fixed-size resource (e.g. the sentinel family) ran out.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Input file could not be read or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace anlforge

#endif  // ANLFORGE_ERRORS_H_
