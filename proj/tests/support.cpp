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

#include "support.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "walkpovm/synthesis.hpp"

namespace testsupport {

double max_abs(const CMatrix &m) { return m.cwiseAbs().maxCoeff(); }

namespace {

CMatrix ginibre(int rows, int cols, std::mt19937_64 &gen) {
    std::normal_distribution<double> nd(0.0, 1.0);
    CMatrix g(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            g(r, c) = Complex(nd(gen), nd(gen));
        }
    }
    return g;
}

}  // namespace

CMatrix haar_unitary(int d, std::mt19937_64 &gen) {
    CMatrix g = ginibre(d, d, gen);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing the phases of R's diagonal makes the distribution Haar.
    for (int i = 0; i < d; ++i) {
        Complex rd = r(i, i);
        double mag = std::abs(rd);
        q.col(i) *= (mag > 0.0) ? rd / mag : Complex(1.0, 0.0);
    }
    return q;
}

CKet random_ket(int d, std::mt19937_64 &gen) {
    CKet v = ginibre(d, 1, gen).col(0);
    return v / v.norm();
}

Rank1Povm random_rank1_povm(int d, int n, std::mt19937_64 &gen) {
    if (n < d) {
        throw std::invalid_argument("random_rank1_povm: need n >= d");
    }
    for (;;) {
        CMatrix u = haar_unitary(n, gen);
        CMatrix w = u.topRows(d);  // w w^dagger = identity on C^d
        bool ok = true;
        Rank1Povm r;
        r.dim = d;
        for (int i = 0; i < n; ++i) {
            CKet col = w.col(i);
            double a = col.squaredNorm();
            if (a < 1e-3) {
                ok = false;
                break;
            }
            r.items.push_back({a, col / col.norm()});
            r.outcome_map.push_back(i);
        }
        if (ok) {
            return r;
        }
    }
}

Rank1Povm make_non_simple(const Rank1Povm &base, std::mt19937_64 &gen) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(base.items.size()) - 1);
    std::uniform_real_distribution<double> frac(0.3, 0.7);
    std::uniform_int_distribution<int> howmany(1, 2);
    Rank1Povm r = base;
    int splits = howmany(gen);
    for (int s = 0; s < splits; ++s) {
        int k = pick(gen);
        double f = frac(gen);
        double a = r.items[k].weight;
        CKet psi = r.items[k].state;
        r.items[k].weight = f * a;
        r.items.insert(r.items.begin() + k + 1, {(1.0 - f) * a, psi});
        r.outcome_map.clear();
        for (int i = 0; i < static_cast<int>(r.items.size()); ++i) {
            r.outcome_map.push_back(i);
        }
    }
    return r;
}

Povm random_mixed_rank_povm(int d, int n_items, std::mt19937_64 &gen) {
    Rank1Povm r = random_rank1_povm(d, n_items, gen);
    std::uniform_int_distribution<int> run(1, 3);
    Povm p;
    p.dim = d;
    int i = 0;
    while (i < n_items) {
        int len = std::min(run(gen), n_items - i);
        CMatrix e = CMatrix::Zero(d, d);
        for (int k = 0; k < len; ++k, ++i) {
            e += r.items[i].weight * (r.items[i].state * r.items[i].state.adjoint());
        }
        p.elements.push_back(e);
    }
    return p;
}

std::vector<CKet> tetrahedron_states() {
    const double s3 = std::sqrt(3.0);
    std::vector<CKet> states(4, CKet(3));
    states[0] << 1.0 / s3, 1.0 / s3, 1.0 / s3;
    states[1] << -1.0 / s3, 1.0 / s3, 1.0 / s3;
    states[2] << 1.0 / s3, -1.0 / s3, 1.0 / s3;
    states[3] << 1.0 / s3, 1.0 / s3, -1.0 / s3;
    return states;
}

Povm tetrahedron_povm() {
    Povm p;
    p.dim = 3;
    for (const auto &psi : tetrahedron_states()) {
        p.elements.push_back(0.75 * (psi * psi.adjoint()));
    }
    return p;
}

WalkProgram tetrahedron_schedule() {
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    const double s6 = std::sqrt(6.0);

    CMatrix c01(3, 3);
    c01 << 1.0 / s3, 1.0 / s3, 1.0 / s3,
           1.0 / s6, 1.0 / s6, -2.0 / s6,
           1.0 / s2, -1.0 / s2, 0.0;
    CMatrix c12(3, 3);
    c12 << s3 / 2.0, 0.5, 0.0,
           0.5, -s3 / 2.0, 0.0,
           0.0, 0.0, 1.0;
    CMatrix c03(3, 3);
    c03 << -1.0 / s6, 1.0 / s3, -1.0 / s2,
           -1.0 / s6, 1.0 / s3, 1.0 / s2,
           std::sqrt(2.0 / 3.0), 1.0 / s3, 0.0;

    WalkProgram prog;
    prog.dim = 3;
    prog.layers.resize(6);
    prog.layers[0].coins[0] = c01;
    prog.layers[1].coins[-1] = walkpovm::not_coin(3);
    prog.layers[1].coins[1] = c12;
    prog.layers[2].coins[0] = c03;
    prog.layers[3].coins[-1] = walkpovm::not_coin(3);
    // layer 5 is a bare translation
    prog.layers[5].coins[-1] = walkpovm::not_coin(3);
    prog.outcome_positions = {{6, 0}, {4, 1}, {2, 2}, {0, 3}};
    return prog;
}

double a_max_bisect(const CMatrix &A, const CKet &psi, int iters) {
    auto min_eig = [&](double a) {
        CMatrix m = A - a * (psi * psi.adjoint());
        Eigen::SelfAdjointEigenSolver<CMatrix> es((m + m.adjoint()) / 2.0);
        return es.eigenvalues().minCoeff();
    };
    double lo = 0.0, hi = 1.5;
    while (min_eig(hi) >= -1e-12 && hi < 1e6) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < iters; ++i) {
        double mid = (lo + hi) / 2.0;
        if (min_eig(mid) >= -1e-12) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

}  // namespace testsupport
