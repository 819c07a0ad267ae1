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
 * POVM data model: validation, Born-rule evaluation, and decomposition of
 * general POVMs into weighted rank-1 form with outcome provenance.
 */

#pragma once

#include <vector>

#include "walkpovm/linalg.hpp"

namespace walkpovm {

// Ordered list of positive-semidefinite operators summing to identity.
struct Povm {
    int dim = 0;
    std::vector<CMatrix> elements;
};

// One rank-1 piece a * |psi><psi| with 0 < a <= 1 and a unit ket psi.
struct Rank1Item {
    double weight = 0.0;
    CKet state;
};

// Rank-1 resolution of a Povm. outcome_map[k] is the index of the source
// element item k came from, so statistics can be regrouped afterwards.
struct Rank1Povm {
    int dim = 0;
    std::vector<Rank1Item> items;
    std::vector<int> outcome_map;
};

struct ValidationReport {
    double hermiticity_residual = 0.0;
    double psd_violation = 0.0;
    double completeness_residual = 0.0;
    bool pass = false;
};

// Checks hermiticity, positivity, and completeness; residuals are maxima
// over elements and reported rather than silently clamped.
ValidationReport validate(const Povm &p, double tol = kDefaultTol);

// Born probabilities p_i = <psi|E_i|psi> for a pure state.
std::vector<double> born_probabilities(const Povm &p, const CKet &state,
                                       double tol = kDefaultTol);

// Born probabilities p_i = Tr(rho E_i) for a density matrix.
std::vector<double> born_probabilities(const Povm &p, const CMatrix &rho,
                                       double tol = kDefaultTol);

// Splits every element into its eigenpairs with eigenvalue > tol.
// Within an element, items are ordered by descending eigenvalue with ties
// broken lexicographically; eigenvector phases are fixed so the
// largest-magnitude amplitude is real positive.
Rank1Povm decompose_rank1(const Povm &p, double tol = kDefaultTol);

// Reassembles a Povm with n_outcomes elements by summing items that share
// an outcome_map entry. Inverse of decompose_rank1 up to roundoff.
Povm regroup(const Rank1Povm &r, int n_outcomes);

}  // namespace walkpovm
