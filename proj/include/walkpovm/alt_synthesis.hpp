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
 * Alternative compiler for rank-1 POVMs. Instead of inverting a residual
 * map, each iteration peels the *maximal* weight of the target state off
 * the residual operator Gamma and dials it back down with a rotation.
 * A counter j tracks how many coin directions the residual has lost; two
 * corrective coins (a NOT and a basis swap) keep the dead directions
 * parked at the top of the coin basis.
 */

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "walkpovm/povm.hpp"
#include "walkpovm/program.hpp"

namespace walkpovm {

struct AltIteration {
    CMatrix Gamma;       // residual operator after this iteration
    double a_tilde = 0.0;  // maximal weight peeled at x = 1
    double theta = 0.0;  // rotation angle restoring the requested weight
    bool cos_one = false;  // whether the peel was exact (theta == 0)
    int j = 0;           // dead-direction counter after this iteration
    CMatrix L;           // map from initial coin state to the coin state
                         // at x = 0 at the start of this iteration
    CMatrix C1;
    CMatrix C2;
    std::optional<CMatrix> C3;  // swap coin applied when the peel was exact
    bool not_correction = false;  // NOT applied at x = 0 (j hit d - 1)
};

struct AltTrace {
    std::vector<AltIteration> iterations;
    // Coin-space map at x = 0 after the last iteration and its corrective
    // coins; the final program layer applies exactly this residual action.
    CMatrix L_final;
};

// Largest a such that A - a |psi><psi| stays positive semidefinite,
// computed as 1 / <psi|A^+|psi>. Requires psi inside the support of A.
double a_max(const CMatrix &A, const CKet &psi, double tol = kDefaultTol);

// First-layer coin: row 0 is eta^dagger where eta is orthogonal to every
// phi in phi_list and to the j top basis kets |d-1>, ..., |d-j>; rows
// d-1, ..., d-j are those basis kets, the rest are completed.
CMatrix build_coin1_alt(const std::vector<CKet> &phi_list, int j, int d,
                        double tol = kDefaultTol);

// Orthonormal basis of the complement of psi, via the Householder
// reflection exchanging psi with a phase-aligned |0>. Deterministic.
std::vector<CKet> householder_complement(const CKet &psi);

// Compiles r into 2(n-1) translation layers plus, when the last iteration
// leaves corrective coins pending, one trailing translation-free layer.
std::pair<WalkProgram, AltTrace> synthesize_alt(const Rank1Povm &r,
                                                double tol = kDefaultTol);

}  // namespace walkpovm
