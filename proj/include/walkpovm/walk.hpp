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
 * State-vector simulator for coined walks on the line: coin 0 moves the
 * walker up, coin 1 moves it down, higher coins stand still. Also extracts
 * the measurement the walker's final position induces on the coin.
 */

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "walkpovm/program.hpp"

namespace walkpovm {

// Dense amplitude window over positions [min_pos, min_pos + amps.size() - 1];
// amps[k] is the coin vector at position min_pos + k.
struct WalkState {
    int dim = 0;
    int min_pos = 0;
    std::vector<CKet> amps;

    int max_pos() const { return min_pos + static_cast<int>(amps.size()) - 1; }
    double total_norm2() const;
    // Coin vector at an absolute position (zero outside the window).
    CKet at(int position) const;
};

// Walker at position 0 carrying the given coin state.
WalkState initial_state(int dim, const CKet &coin_state);

// Applies position-wise coins, then (if translate) the conditional shift.
// The window is trimmed to exactly-zero boundaries so "no amplitude below
// x = -1" stays an exact statement, not a tolerance one.
WalkState step(const WalkState &state, const CoinLayer &layer, bool translate);

struct RunResult {
    WalkState state;
    std::map<int, double> distribution;
};

// Evolves |x=0> (x) coin_state through all layers (post_layer translation-
// free) and returns the final state with its position distribution.
RunResult run(const WalkProgram &prog, const CKet &coin_state);

// Position -> effective coin-space POVM element Omega_position.
using InducedPovm = std::map<int, CMatrix>;

// Evolves each coin basis state and assembles the per-position Kraus
// matrices M_k; Omega_k = M_k^dagger M_k. Equivalent to dilating the whole
// program into one unitary and tracing out the walker, but far cheaper.
InducedPovm induced_povm(const WalkProgram &prog);

// Probability of landing at `position` and the normalized coin state
// conditioned on that outcome. Throws NoAmplitudeError when the
// probability is below 1e-12.
std::pair<double, CKet> conditional_state(const WalkProgram &prog, const CKet &input,
                                          int position);

// i.i.d. position samples from the exact run() distribution via inverse
// CDF over a seeded 64-bit Mersenne Twister. Same seed, same histogram.
std::map<int, std::int64_t> sample(const WalkProgram &prog, const CKet &input,
                                   std::int64_t shots, std::uint64_t seed);

}  // namespace walkpovm
