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

#include "walkpovm/synthesis.hpp"

#include <algorithm>
#include <cmath>

#include "walkpovm/errors.hpp"

namespace walkpovm {

CMatrix not_coin(int d) {
    CMatrix m = CMatrix::Identity(d, d);
    if (d > 1) {
        m(0, 0) = 0.0;
        m(1, 1) = 0.0;
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
    }
    return m;
}

std::pair<CMatrix, double> coin1(const CMatrix &K_prev, const CKet &psi, double tol,
                                 CompletionPolicy policy) {
    const int d = static_cast<int>(K_prev.rows());
    if (K_prev.cols() != d || psi.size() != d) {
        throw InvalidInputError("coin1: dimension mismatch");
    }
    // The inversion of K^dagger acts on its support; directions whose
    // *squared* singular value sits at roundoff scale are junk left over
    // from earlier weight-exhausting iterations, so the singular-value
    // cutoff is sqrt(tol), not tol.
    const CMatrix pinv = pseudo_inverse(K_prev.adjoint(), std::sqrt(tol));
    const CKet v = pinv * psi;
    const double b = v.norm();
    if (b <= tol * d) {
        throw InfeasibleError("coin1: state has no support on the residual map");
    }
    const CKet row0 = (v / b).conjugate();
    return {complete_unitary({row0}, d, policy), b};
}

CMatrix advance_K(const CMatrix &K_prev, const CMatrix &C1, double beta_prime) {
    const int d = static_cast<int>(K_prev.rows());
    if (K_prev.cols() != d || C1.rows() != d || C1.cols() != d) {
        throw InvalidInputError("advance_K: dimension mismatch");
    }
    if (beta_prime < 0.0 || beta_prime > 1.0) {
        throw InvalidInputError("advance_K: beta_prime outside [0, 1]");
    }
    CMatrix S = CMatrix::Identity(d, d);
    if (d > 1) {
        S(0, 0) = 0.0;
        S(1, 1) = 0.0;
        S(0, 1) = 1.0;
        S(1, 0) = beta_prime;
    }
    return S * C1 * K_prev;
}

std::pair<double, double> coin2_params(double a, double b) {
    // Weights are <= 1 mathematically; squared norms carry ~1e-16 dust.
    if (!(a > 0.0) || a > 1.0 + 1e-9 || !(b > 0.0)) {
        throw InvalidInputError("coin2_params: need a in (0, 1] and b > 0");
    }
    const double ab2 = a * b * b;
    if (ab2 > 1.0 + 1e-9) {
        throw InfeasibleError("coin2_params: a b^2 exceeds 1 beyond the clamp window");
    }
    if (ab2 >= 1.0 - 1e-9) {
        // An exact peel evaluates to 1 only up to roundoff; snapping makes
        // the weight rotation genuinely disappear instead of leaving an
        // O(1e-8) rotation in the schedule.
        return {1.0, 0.0};
    }
    return {std::sqrt(ab2), std::sqrt(1.0 - ab2)};
}

std::pair<WalkProgram, SynthesisTrace> synthesize(const Rank1Povm &r, double tol,
                                                  CompletionPolicy policy) {
    const int d = r.dim;
    const int n = static_cast<int>(r.items.size());
    if (n < 1) {
        throw InvalidInputError("synthesize: no items");
    }
    WalkProgram prog;
    prog.dim = d;
    SynthesisTrace trace;
    CMatrix K = CMatrix::Identity(d, d);
    for (int i = 0; i + 1 < n; ++i) {
        const auto &[a, psi] = r.items[i];
        auto [C1, b] = coin1(K, psi, tol, policy);
        const auto [alpha, beta] = coin2_params(a, b);
        K = advance_K(K, C1, beta);

        ProgramLayer layer_a;
        layer_a.coins[0] = C1;
        prog.layers.push_back(std::move(layer_a));

        ProgramLayer layer_b;
        layer_b.coins[-1] = not_coin(d);
        CMatrix C2 = CMatrix::Identity(d, d);
        if (alpha < 1.0) {
            C2(0, 0) = alpha;
            C2(0, 1) = beta;
            C2(1, 0) = beta;
            C2(1, 1) = -alpha;
            layer_b.coins[1] = C2;
        }
        prog.layers.push_back(std::move(layer_b));

        trace.iterations.push_back({K, b, alpha, beta, std::move(C1), std::move(C2)});
    }
    for (int i = 0; i < n; ++i) {
        prog.outcome_positions[2 * (n - 1 - i)] = i;
        trace.earliest_iteration.push_back(std::min(i + 1, n - 1));
    }
    return {std::move(prog), std::move(trace)};
}

WalkProgram extend_post_measurement(const WalkProgram &prog, const SynthesisTrace &trace,
                                    const std::vector<CKet> &targets, double tol) {
    const int d = prog.dim;
    const int n = static_cast<int>(prog.outcome_positions.size());
    if (static_cast<int>(targets.size()) != n) {
        throw InvalidInputError("extend_post_measurement: need one target per outcome");
    }
    for (const auto &zeta : targets) {
        if (zeta.size() != d || std::abs(zeta.norm() - 1.0) > 1e-8) {
            throw InvalidInputError("extend_post_measurement: target not a unit ket");
        }
    }
    WalkProgram out = prog;

    // Rotate the leftover coin state at x = 0 onto |0> so every outcome
    // position carries a pure |0> coin before the final rotations.
    const CMatrix K = trace.iterations.empty() ? CMatrix::Identity(d, d)
                                               : trace.iterations.back().K;
    // K^dagger K = a_n |psi_n><psi_n| up to roundoff; take the top eigenvector.
    Eigen::SelfAdjointEigenSolver<CMatrix> gram(K.adjoint() * K);
    const CKet psi_n = gram.eigenvectors().col(d - 1);
    auto [Cn1, b_n] = coin1(K, psi_n, tol);
    (void)b_n;
    // The completion leaves a global phase free; pin the first row.
    CKet row0 = canonical_phase(CKet(Cn1.row(0).transpose()));
    Cn1 = complete_unitary({row0}, d);
    ProgramLayer last;
    last.coins[0] = Cn1;
    last.translate = false;
    out.layers.push_back(std::move(last));

    CoinLayer post;
    for (int l = 0; l < n; ++l) {
        const CKet &zeta = targets[n - 1 - l];
        // Unitary with first column zeta == adjoint of one with first row
        // zeta^dagger; maps |0> to the target.
        post[2 * l] = complete_unitary({zeta.conjugate()}, d).adjoint();
    }
    out.post_layer = std::move(post);
    return out;
}

}  // namespace walkpovm
