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

#ifndef WALKPOVM_TESTS_SUPPORT_HPP_
#define WALKPOVM_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "walkpovm/linalg.hpp"
#include "walkpovm/povm.hpp"
#include "walkpovm/program.hpp"

namespace testsupport {

using walkpovm::CKet;
using walkpovm::CMatrix;
using walkpovm::Complex;
using walkpovm::Povm;
using walkpovm::Rank1Povm;
using walkpovm::WalkProgram;

double max_abs(const CMatrix &m);

CMatrix haar_unitary(int d, std::mt19937_64 &gen);
CKet random_ket(int d, std::mt19937_64 &gen);

// Simple rank-1 POVM with n items on dimension d: the first d rows of a
// Haar n x n unitary give weights/states resolving the identity. Items with
// weight below 1e-3 are rejected and redrawn so every case is well scaled.
Rank1Povm random_rank1_povm(int d, int n, std::mt19937_64 &gen);

// Splits one or two items of a simple POVM into proportional copies, giving
// repeated directions (a non-simple rank-1 POVM). Each copy keeps its own
// outcome index.
Rank1Povm make_non_simple(const Rank1Povm &base, std::mt19937_64 &gen);

// Random POVM whose elements have mixed ranks, built by summing consecutive
// runs of a random rank-1 resolution.
Povm random_mixed_rank_povm(int d, int n_items, std::mt19937_64 &gen);

// The four-outcome qutrit tetrahedron measurement E_i = (3/4)|psi_i><psi_i|.
Povm tetrahedron_povm();
std::vector<CKet> tetrahedron_states();

// Its published six-layer walk schedule, transcribed coin by coin.
WalkProgram tetrahedron_schedule();

// Largest a with A - a|psi><psi| still PSD, found by bisection on the
// minimum eigenvalue. Independent of the closed-form route.
double a_max_bisect(const CMatrix &A, const CKet &psi, int iters = 60);

}  // namespace testsupport

#endif  // WALKPOVM_TESTS_SUPPORT_HPP_
