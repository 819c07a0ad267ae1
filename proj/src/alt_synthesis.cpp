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

#include "walkpovm/alt_synthesis.hpp"

#include <algorithm>
#include <cmath>

#include "walkpovm/errors.hpp"
#include "walkpovm/synthesis.hpp"

namespace walkpovm {

namespace {

// Tolerance gating the "exact peel" branch; it controls a discrete
// counter, so it is deliberately looser than the numeric tolerance.
constexpr double kCosOneWindow = 1e-9;

CMatrix rotation_coin(double cos_t, double sin_t, int d) {
    CMatrix m = CMatrix::Identity(d, d);
    if (d > 1) {
        m(0, 0) = cos_t;
        m(0, 1) = sin_t;
        m(1, 0) = sin_t;
        m(1, 1) = -cos_t;
    }
    return m;
}

// Swap of coins 1 and d-j (identity when they coincide).
CMatrix swap_coin(int j, int d) {
    CMatrix m = CMatrix::Identity(d, d);
    const int k = d - j;
    if (k != 1 && k >= 0 && k < d) {
        m(1, 1) = 0.0;
        m(k, k) = 0.0;
        m(1, k) = 1.0;
        m(k, 1) = 1.0;
    }
    return m;
}

}  // namespace

double a_max(const CMatrix &A, const CKet &psi, double tol) {
    const int d = static_cast<int>(A.rows());
    if (A.cols() != d || psi.size() != d) {
        throw InvalidInputError("a_max: dimension mismatch");
    }
    detail::require_finite(A, "a_max");
    Eigen::SelfAdjointEigenSolver<CMatrix> es((A + A.adjoint()) / 2.0);
    const auto &w = es.eigenvalues();
    const double wmax = w.maxCoeff();
    if (wmax <= 0.0) {
        throw InfeasibleError("a_max: operator has no support");
    }
    const double cutoff = tol * wmax;
    // Support projection residual decides feasibility before inverting.
    CKet proj = CKet::Zero(d);
    double quad = 0.0;
    for (int k = 0; k < d; ++k) {
        if (w(k) > cutoff) {
            const Complex c = es.eigenvectors().col(k).dot(psi);
            proj += c * es.eigenvectors().col(k);
            quad += std::norm(c) / w(k);
        }
    }
    if ((psi - proj).norm() > std::sqrt(tol)) {
        throw InfeasibleError("a_max: state lies outside the operator support");
    }
    return 1.0 / quad;
}

std::vector<CKet> householder_complement(const CKet &psi) {
    const int d = static_cast<int>(psi.size());
    Complex phase = psi(0);
    const double mag = std::abs(phase);
    phase = (mag > 1e-14) ? phase / mag : Complex(1.0, 0.0);
    CKet v = psi;
    v(0) += phase;
    const CMatrix H = CMatrix::Identity(d, d) -
                      (2.0 / v.squaredNorm()) * (v * v.adjoint());
    std::vector<CKet> out;
    out.reserve(d - 1);
    for (int m = 1; m < d; ++m) {
        out.push_back(H.col(m));
    }
    return out;
}

CMatrix build_coin1_alt(const std::vector<CKet> &phi_list, int j, int d, double tol) {
    if (j < 0 || j > d - 1) {
        throw InvalidInputError("build_coin1_alt: j outside [0, d-1]");
    }
    const int n_phi = static_cast<int>(phi_list.size());
    CMatrix constraints = CMatrix::Zero(n_phi + j, d);
    for (int m = 0; m < n_phi; ++m) {
        if (phi_list[m].size() != d) {
            throw InvalidInputError("build_coin1_alt: phi dimension mismatch");
        }
        constraints.row(m) = phi_list[m].adjoint();
    }
    for (int l = 0; l < j; ++l) {
        constraints(n_phi + l, d - 1 - l) = 1.0;
    }
    Eigen::JacobiSVD<CMatrix> svd(constraints, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    // The phi vectors come from contractions of unit kets, so their scale
    // is at most 1; an absolute floor keeps exactly-dead directions from
    // registering as rank.
    const double floor = tol * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > floor) {
            ++rank;
        }
    }
    if (n_phi > 0) {
        Eigen::JacobiSVD<CMatrix> phi_svd(constraints.topRows(n_phi));
        const auto &psv = phi_svd.singularValues();
        const double pfloor = tol * std::max(psv.size() > 0 ? psv(0) : 0.0, 1.0);
        int phi_rank = 0;
        for (Eigen::Index k = 0; k < psv.size(); ++k) {
            if (psv(k) > pfloor) {
                ++phi_rank;
            }
        }
        if (phi_rank >= d - j) {
            throw InfeasibleError("build_coin1_alt: constraint span too large");
        }
    }
    if (rank >= d) {
        throw InfeasibleError("build_coin1_alt: no direction left for eta");
    }
    const CKet eta = canonical_phase(svd.matrixV().col(rank));

    std::vector<CKet> fixed;
    fixed.push_back(eta.conjugate());
    for (int l = 0; l < j; ++l) {
        CKet e = CKet::Zero(d);
        e(d - 1 - l) = 1.0;
        fixed.push_back(e);
    }
    const CMatrix packed = complete_unitary(fixed, d);
    CMatrix C = CMatrix::Zero(d, d);
    C.row(0) = packed.row(0);
    for (int l = 0; l < j; ++l) {
        C.row(d - 1 - l) = packed.row(1 + l);
    }
    for (int m = 1; m < d - j; ++m) {
        C.row(m) = packed.row(1 + j + (m - 1));
    }
    return C;
}

std::pair<WalkProgram, AltTrace> synthesize_alt(const Rank1Povm &r, double tol) {
    const int d = r.dim;
    const int n = static_cast<int>(r.items.size());
    if (n < 1) {
        throw InvalidInputError("synthesize_alt: no items");
    }
    WalkProgram prog;
    prog.dim = d;
    AltTrace trace;

    CMatrix Gamma = CMatrix::Identity(d, d);
    CMatrix L = CMatrix::Identity(d, d);
    CMatrix pending = CMatrix::Identity(d, d);
    bool have_pending = false;
    int j = 0;

    for (int i = 0; i + 1 < n; ++i) {
        const auto &[a, psi] = r.items[i];
        const CMatrix L_start = L;

        std::vector<CKet> phis;
        phis.reserve(d - 1);
        for (const auto &comp : householder_complement(psi)) {
            phis.push_back(L * comp);
        }
        const CMatrix C1 = build_coin1_alt(phis, j, d, tol);

        const double a_t = a_max(Gamma, psi, tol);
        if (a > a_t * (1.0 + 1e-9)) {
            throw InfeasibleError("synthesize_alt: item weight exceeds the residual budget");
        }
        const bool cos_one = (a_t - a) <= kCosOneWindow * std::max(1.0, a);
        const double cos_t = cos_one ? 1.0 : std::sqrt(a / a_t);
        const double sin_t = cos_one ? 0.0 : std::sqrt(std::max(0.0, 1.0 - a / a_t));

        ProgramLayer layer_a;
        layer_a.coins[0] = have_pending ? CMatrix(C1 * pending) : C1;
        prog.layers.push_back(std::move(layer_a));
        pending = CMatrix::Identity(d, d);
        have_pending = false;

        ProgramLayer layer_b;
        layer_b.coins[1] = rotation_coin(cos_t, sin_t, d);
        layer_b.coins[-1] = not_coin(d);
        prog.layers.push_back(std::move(layer_b));

        // What stays at x = 0: the down-moving branch re-lifted by NOT
        // plus the dialled-back part of the up-moving branch.
        CMatrix S = CMatrix::Identity(d, d);
        if (d > 1) {
            S(0, 0) = 0.0;
            S(1, 1) = 0.0;
            S(0, 1) = 1.0;
            S(1, 0) = sin_t;
        }
        L = S * C1 * L;

        AltIteration rec;
        rec.a_tilde = a_t;
        rec.theta = std::acos(std::clamp(cos_t, -1.0, 1.0));
        rec.cos_one = cos_one;
        rec.C1 = C1;
        rec.C2 = rotation_coin(cos_t, sin_t, d);

        if (j == d - 1) {
            const CMatrix nc = not_coin(d);
            L = nc * L;
            pending = nc * pending;
            have_pending = true;
            rec.not_correction = true;
        }
        if (cos_one) {
            j += 1;
            if (j > d - 1) {
                throw InternalError("synthesize_alt: dead-direction counter overflow");
            }
            const CMatrix C3 = swap_coin(j, d);
            L = C3 * L;
            pending = C3 * pending;
            have_pending = true;
            rec.C3 = C3;
        }

        Gamma -= a * (psi * psi.adjoint());
        Eigen::SelfAdjointEigenSolver<CMatrix> es((Gamma + Gamma.adjoint()) / 2.0);
        if (es.eigenvalues().minCoeff() < -1e-8) {
            throw InternalError("synthesize_alt: residual operator lost positivity");
        }

        rec.Gamma = Gamma;
        rec.j = j;
        rec.L = L_start;
        trace.iterations.push_back(std::move(rec));
    }
    trace.L_final = L;

    if (have_pending) {
        ProgramLayer tail;
        tail.coins[0] = pending;
        tail.translate = false;
        prog.layers.push_back(std::move(tail));
    }
    for (int i = 0; i < n; ++i) {
        prog.outcome_positions[2 * (n - 1 - i)] = i;
    }
    return {std::move(prog), std::move(trace)};
}

}  // namespace walkpovm
