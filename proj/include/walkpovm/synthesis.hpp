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
 * Compiles a rank-1 POVM with n items into a 2(n-1)-layer walk program.
 * Each iteration peels one item off at the top of the lattice: a coin at
 * x = 0 rotates the target state onto coin |0>, a rotation at x = 1 fixes
 * the peeled weight, and the operator K tracks what remains at x = 0.
 */

#pragma once

#include <utility>
#include <vector>

#include "walkpovm/povm.hpp"
#include "walkpovm/program.hpp"

namespace walkpovm {

// Per-iteration bookkeeping, enough to audit or extend a synthesis.
struct IterationRecord {
    CMatrix K;           // residual coin-space map after this iteration
    double b = 0.0;      // norm of K_prev^{+dagger} psi
    double alpha_prime = 0.0;
    double beta_prime = 0.0;
    CMatrix C1;
    CMatrix C2;          // identity when alpha_prime == 1
};

struct SynthesisTrace {
    std::vector<IterationRecord> iterations;
    // Iteration (1-based) after which each item's outcome probability is
    // already fully accumulated; informational only.
    std::vector<int> earliest_iteration;
};

// The NOT coin: swaps coins 0 and 1, identity on the rest.
CMatrix not_coin(int d);

// First-layer coin for one iteration: the unitary whose first row is
// (b^{-1} K_prev^{+dagger} psi)^dagger, completed deterministically.
// Returns the coin and b. Throws InfeasibleError when psi has no support
// on the residual map (b <= tol * d).
std::pair<CMatrix, double> coin1(const CMatrix &K_prev, const CKet &psi, double tol,
                                 CompletionPolicy policy = CompletionPolicy::kForwardScan);

// K recursion: (|0><1| + beta' |1><0| + sum_{k>=2} |k><k|) C1 K_prev.
CMatrix advance_K(const CMatrix &K_prev, const CMatrix &C1, double beta_prime);

// alpha' = min(sqrt(a) b, 1), beta' = sqrt(1 - alpha'^2). Values of
// a b^2 within 1e-9 of 1 on either side snap to exactly (1, 0); more
// than 1e-9 above 1 is infeasible.
std::pair<double, double> coin2_params(double a, double b);

// Builds the full program: per item i < n, layer {0 -> C1_i} then layer
// {1 -> C2_i, -1 -> NOT}; outcomes land on positions 2(n-1), ..., 2, 0.
std::pair<WalkProgram, SynthesisTrace> synthesize(
    const Rank1Povm &r, double tol = kDefaultTol,
    CompletionPolicy policy = CompletionPolicy::kForwardScan);

// Appends a final coin at x = 0 and a translation-free layer rotating the
// conditional coin state at outcome position 2l onto targets[n-1-l].
// Targets are reached up to a global phase.
WalkProgram extend_post_measurement(const WalkProgram &prog, const SynthesisTrace &trace,
                                    const std::vector<CKet> &targets,
                                    double tol = kDefaultTol);

}  // namespace walkpovm
