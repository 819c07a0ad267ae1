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

#ifndef WALKPOVM_SERIALIZE_HPP_
#define WALKPOVM_SERIALIZE_HPP_

#include <string>

#include "walkpovm/povm.hpp"
#include "walkpovm/program.hpp"

namespace walkpovm {

// JSON text formats.  Numbers are written as shortest round-trip decimals and
// object keys are sorted, so write -> read -> write is byte-identical.
// Malformed input raises FileFormatError.

std::string povm_to_text(const Povm &p);
Povm povm_from_text(const std::string &text);

std::string schedule_to_text(const WalkProgram &prog);
WalkProgram schedule_from_text(const std::string &text);

std::string state_to_text(const CKet &psi);
CKet state_from_text(const std::string &text);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace walkpovm

#endif  // WALKPOVM_SERIALIZE_HPP_
