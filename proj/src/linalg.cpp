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

#include "walkpovm/linalg.hpp"

#include <cmath>

#include "walkpovm/errors.hpp"

namespace walkpovm {

namespace detail {

void require_finite(const CMatrix &m, const char *what) {
    if (!m.allFinite()) {
        throw InvalidInputError(std::string(what) + ": non-finite entries");
    }
}

double operator_norm(const CMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace detail

CMatrix pseudo_inverse(const CMatrix &m, double tol) {
    detail::require_finite(m, "pseudo_inverse");
    if (tol <= 0) {
        throw InvalidInputError("pseudo_inverse: tol must be positive");
    }
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0) {
        return CMatrix::Zero(m.cols(), m.rows());
    }
    const double cutoff = tol * sv(0);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            inv(i) = 1.0 / sv(i);
        }
    }
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

int numerical_rank(const CMatrix &m, double tol) {
    detail::require_finite(m, "numerical_rank");
    if (tol <= 0) {
        throw InvalidInputError("numerical_rank: tol must be positive");
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) {
        return 0;
    }
    const double cutoff = tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

CMatrix complete_unitary(const std::vector<CKet> &fixed_rows, int d,
                         CompletionPolicy policy) {
    if (d < 1) {
        throw InvalidInputError("complete_unitary: d must be >= 1");
    }
    if (static_cast<int>(fixed_rows.size()) > d) {
        throw InvalidInputError("complete_unitary: more fixed rows than dimensions");
    }
    for (const auto &row : fixed_rows) {
        if (row.size() != d) {
            throw InvalidInputError("complete_unitary: fixed row has wrong dimension");
        }
        detail::require_finite(row, "complete_unitary");
    }
    for (size_t i = 0; i < fixed_rows.size(); ++i) {
        for (size_t k = 0; k <= i; ++k) {
            const Complex g = fixed_rows[k].dot(fixed_rows[i]);
            const double want = (i == k) ? 1.0 : 0.0;
            if (std::abs(g - want) > 1e-10) {
                throw InvalidInputError("complete_unitary: fixed rows not orthonormal");
            }
        }
    }

    CMatrix u(d, d);
    int filled = 0;
    for (const auto &row : fixed_rows) {
        u.row(filled++) = row.transpose();
    }
    const bool forward = policy == CompletionPolicy::kForwardScan;
    for (int scan = 0; scan < d && filled < d; ++scan) {
        const int j = forward ? scan : d - 1 - scan;
        CKet c = CKet::Zero(d);
        c(j) = 1.0;
        // Two orthogonalization passes keep the residual orthogonal to
        // working precision even when the candidate nearly lies in the span.
        for (int pass = 0; pass < 2; ++pass) {
            for (int r = 0; r < filled; ++r) {
                c -= u.row(r).dot(c) * u.row(r).transpose();
            }
        }
        const double nn = c.norm();
        if (nn >= 1e-8) {
            u.row(filled++) = (c / nn).transpose();
        }
    }
    if (filled < d) {
        throw InternalError("complete_unitary: basis scan failed to complete");
    }
    return u;
}

CKet canonical_phase(const CKet &v) {
    Eigen::Index imax = 0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v(i));
        if (a > best) {
            best = a;
            imax = i;
        }
    }
    if (best < 1e-14) {
        return v;
    }
    return v * (best / v(imax));
}

}  // namespace walkpovm
