// Copyright 2026 The walkpovm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace walkpovm {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed arguments: wrong shapes, non-finite entries, broken invariants.
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string &msg) : Error(msg) {}
};

// Input is syntactically fine but cannot be compiled into a walk program
// (e.g. a weight exceeding the remaining operator budget).
struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string &msg) : Error(msg) {}
};

// Conditioning on an outcome that carries no probability mass.
struct NoAmplitudeError : Error {
    explicit NoAmplitudeError(const std::string &msg) : Error(msg) {}
};

// A should-never-happen consistency check tripped mid-pipeline.
struct InternalError : Error {
    explicit InternalError(const std::string &msg) : Error(msg) {}
};

// Unparseable or schema-violating input files.
struct FileFormatError : Error {
    explicit FileFormatError(const std::string &msg) : Error(msg) {}
};

}  // namespace walkpovm
