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

/**
 * @file
 * The one-parameter family of qutrit SIC-POVMs covariant under the
 * shift/phase group, plus a hand-written 16-layer walk schedule for it
 * kept as a regression fixture for the synthesis pipeline.
 */

#pragma once

#include <vector>

#include "walkpovm/povm.hpp"
#include "walkpovm/program.hpp"

namespace walkpovm {

// The nine unit kets X^j Z^k (|1> - e^{it}|2>)/sqrt(2), ordered i = 3j + k.
// t is reduced mod 2pi.
std::vector<CKet> sic_states(double t);

// Nine-element qutrit POVM E_i = |psi_i><psi_i| / 3.
Povm sic_povm(double t);

// The fixed 16-layer schedule measuring sic_povm(t): eight iterations of
// a first-layer coin and a weight rotation whose parameters are
// t-independent. Outcomes at positions 16, 14, ..., 0.
WalkProgram paper_schedule(double t);

// The weight-rotation diagonal of the fixed schedule:
// (sqrt(1/3), sqrt(3/8), sqrt(2/5), sqrt(1/2), sqrt(2/3), 1, sqrt(2/3), 1).
const std::vector<double> &sic_alpha_table();

}  // namespace walkpovm
