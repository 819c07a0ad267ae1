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

#include "walkpovm/sic.hpp"

#include <cmath>
#include <numbers>

#include "walkpovm/errors.hpp"
#include "walkpovm/synthesis.hpp"

namespace walkpovm {

namespace {

constexpr double kPi = std::numbers::pi;

double reduce_mod_2pi(double t) {
    if (!std::isfinite(t)) {
        throw InvalidInputError("sic: t must be finite");
    }
    t = std::fmod(t, 2.0 * kPi);
    if (t < 0.0) {
        t += 2.0 * kPi;
    }
    return t;
}

Complex ei(double angle) { return std::polar(1.0, angle); }

}  // namespace

std::vector<CKet> sic_states(double t) {
    t = reduce_mod_2pi(t);
    CMatrix X = CMatrix::Zero(3, 3);
    X(0, 2) = 1.0;
    X(1, 0) = 1.0;
    X(2, 1) = 1.0;
    CMatrix Z = CMatrix::Zero(3, 3);
    Z(0, 0) = 1.0;
    Z(1, 1) = ei(2.0 * kPi / 3.0);
    Z(2, 2) = ei(4.0 * kPi / 3.0);
    CKet fid(3);
    fid << 0.0, 1.0 / std::sqrt(2.0), -ei(t) / std::sqrt(2.0);
    std::vector<CKet> out;
    out.reserve(9);
    CMatrix Xj = CMatrix::Identity(3, 3);
    for (int j = 0; j < 3; ++j) {
        CMatrix Zk = CMatrix::Identity(3, 3);
        for (int k = 0; k < 3; ++k) {
            out.push_back(Xj * Zk * fid);
            Zk = Z * Zk;
        }
        Xj = X * Xj;
    }
    return out;
}

Povm sic_povm(double t) {
    Povm p;
    p.dim = 3;
    for (const auto &psi : sic_states(t)) {
        p.elements.push_back((psi * psi.adjoint()) / 3.0);
    }
    return p;
}

const std::vector<double> &sic_alpha_table() {
    static const std::vector<double> table = {
        std::sqrt(1.0 / 3.0), std::sqrt(3.0 / 8.0), std::sqrt(2.0 / 5.0),
        std::sqrt(1.0 / 2.0), std::sqrt(2.0 / 3.0), 1.0,
        std::sqrt(2.0 / 3.0), 1.0,
    };
    return table;
}

WalkProgram paper_schedule(double t) {
    t = reduce_mod_2pi(t);
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    const double s6 = std::sqrt(6.0);
    const Complex q = ei(kPi / 6.0);
    const Complex q2 = q * q;
    const Complex q5 = q2 * q2 * q;
    const Complex I(0.0, 1.0);

    std::vector<CMatrix> first(8, CMatrix::Zero(3, 3));
    first[0] << 0.0, 1.0 / s2, -ei(-t) / s2,
                1.0, 0.0, 0.0,
                0.0, 1.0 / s2, ei(-t) / s2;
    first[1] << 0.0, -1.0 / s3, -I * std::sqrt(2.0 / 3.0),
                1.0, 0.0, 0.0,
                0.0, std::sqrt(2.0 / 3.0), -I / s3;
    first[2] << 0.0, -1.0 / s6, -std::sqrt(5.0 / 6.0),
                1.0, 0.0, 0.0,
                0.0, std::sqrt(5.0 / 6.0), -1.0 / s6;
    first[3] << -ei(-t) / s3, ei(t) / (q2 * s3), q * ei(t) / s3,
                0.0, 1.0 / s2, -I / s2,
                2.0 * q2 * ei(-2.0 * t) / s6, 1.0 / s6, I / s6;
    first[4] << 0.0, 1.0 / (q5 * s2), -q * ei(t) / s2,
                1.0, 0.0, 0.0,
                0.0, 1.0 / s2, -ei(t) / s2;
    first[5] << 0.0, -q2 / s2, -1.0 / s2,
                1.0, 0.0, 0.0,
                0.0, 1.0 / s2, -1.0 / (q2 * s2);
    first[6] << q2 * ei(-t) / s2, 0.0, q * ei(t) / s2,
                0.0, 1.0, 0.0,
                1.0 / s2, 0.0, q5 * ei(2.0 * t) / s2;
    first[7] << 0.0, -1.0 / s2, q5 * ei(-t) / s2,
                1.0, 0.0, 0.0,
                0.0, 1.0 / s2, q5 * ei(-t) / s2;

    WalkProgram prog;
    prog.dim = 3;
    const auto &alphas = sic_alpha_table();
    for (int i = 0; i < 8; ++i) {
        ProgramLayer layer_a;
        layer_a.coins[0] = first[i];
        prog.layers.push_back(std::move(layer_a));

        ProgramLayer layer_b;
        layer_b.coins[-1] = not_coin(3);
        const double alpha = alphas[i];
        if (alpha < 1.0) {
            const double beta = std::sqrt(1.0 - alpha * alpha);
            CMatrix c2 = CMatrix::Identity(3, 3);
            c2(0, 0) = alpha;
            c2(0, 1) = beta;
            c2(1, 0) = beta;
            c2(1, 1) = -alpha;
            layer_b.coins[1] = c2;
        }
        prog.layers.push_back(std::move(layer_b));
    }
    for (int i = 0; i < 9; ++i) {
        prog.outcome_positions[2 * (8 - i)] = i;
    }
    return prog;
}

}  // namespace walkpovm
