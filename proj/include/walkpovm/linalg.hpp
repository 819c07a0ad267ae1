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
 * Dense complex-matrix primitives: SVD-backed pseudoinverse, numerical rank,
 * and deterministic completion of partially specified unitaries.
 */

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace walkpovm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CKet = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-10;

// Moore-Penrose pseudoinverse. Singular values <= tol * sigma_max are
// treated as zero; reduces to the ordinary inverse on invertible input.
CMatrix pseudo_inverse(const CMatrix &m, double tol = kDefaultTol);

// Number of singular values > tol * sigma_max (0 for the zero matrix).
int numerical_rank(const CMatrix &m, double tol = kDefaultTol);

// Scan order used when completing a partial unitary. Both policies are
// valid; exposing two lets callers demonstrate completion independence.
enum class CompletionPolicy { kForwardScan, kReverseScan };

// Returns a d x d unitary whose first rows equal `fixed_rows` exactly.
// Remaining rows come from Gram-Schmidt over the canonical basis in the
// given scan order, skipping candidates that project to (almost) nothing.
// Throws InvalidInputError unless the fixed rows are orthonormal to 1e-10.
CMatrix complete_unitary(const std::vector<CKet> &fixed_rows, int d,
                         CompletionPolicy policy = CompletionPolicy::kForwardScan);

// Rescales v by a unit phase so its largest-magnitude entry is real
// positive. Zero vectors pass through unchanged.
CKet canonical_phase(const CKet &v);

namespace detail {

// Largest singular value.
double operator_norm(const CMatrix &m);

// Throws InvalidInputError when m contains NaN or Inf.
void require_finite(const CMatrix &m, const char *what);

}  // namespace detail

}  // namespace walkpovm
