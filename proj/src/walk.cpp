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

#include "walkpovm/walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "walkpovm/errors.hpp"

namespace walkpovm {

namespace {

void require_unitary(const CMatrix &m, int d) {
    if (m.rows() != d || m.cols() != d) {
        throw InvalidInputError("step: coin dimension mismatch");
    }
    if ((m * m.adjoint() - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidInputError("step: coin is not unitary");
    }
}

// Drops exactly-zero coin vectors at both window edges.
void trim(WalkState &s) {
    size_t lo = 0;
    while (lo + 1 < s.amps.size() && s.amps[lo].isZero(0.0)) {
        ++lo;
    }
    size_t hi = s.amps.size();
    while (hi > lo + 1 && s.amps[hi - 1].isZero(0.0)) {
        --hi;
    }
    if (lo > 0 || hi < s.amps.size()) {
        std::vector<CKet> kept(s.amps.begin() + lo, s.amps.begin() + hi);
        s.amps.swap(kept);
        s.min_pos += static_cast<int>(lo);
    }
}

}  // namespace

double WalkState::total_norm2() const {
    double total = 0.0;
    for (const auto &v : amps) {
        total += v.squaredNorm();
    }
    return total;
}

CKet WalkState::at(int position) const {
    const int k = position - min_pos;
    if (k < 0 || k >= static_cast<int>(amps.size())) {
        return CKet::Zero(dim);
    }
    return amps[k];
}

WalkState initial_state(int dim, const CKet &coin_state) {
    if (coin_state.size() != dim) {
        throw InvalidInputError("initial_state: coin state dimension mismatch");
    }
    if (std::abs(coin_state.norm() - 1.0) > 1e-8) {
        throw InvalidInputError("initial_state: coin state is not normalized");
    }
    WalkState s;
    s.dim = dim;
    s.min_pos = 0;
    s.amps = {coin_state};
    return s;
}

WalkState step(const WalkState &state, const CoinLayer &layer, bool translate) {
    const int d = state.dim;
    for (const auto &[pos, coin] : layer) {
        require_unitary(coin, d);
    }
    std::vector<CKet> coined(state.amps.size());
    for (size_t k = 0; k < state.amps.size(); ++k) {
        const auto it = layer.find(state.min_pos + static_cast<int>(k));
        coined[k] = (it != layer.end()) ? CKet(it->second * state.amps[k])
                                        : state.amps[k];
    }
    WalkState out;
    out.dim = d;
    if (!translate) {
        out.min_pos = state.min_pos;
        out.amps = std::move(coined);
        trim(out);
        return out;
    }
    // Window grows by one on each side; coin 0 shifts up, coin 1 down,
    // the rest stand still.
    out.min_pos = state.min_pos - 1;
    out.amps.assign(state.amps.size() + 2, CKet::Zero(d));
    for (size_t k = 0; k < coined.size(); ++k) {
        const size_t base = k + 1;
        out.amps[base + 1](0) += coined[k](0);
        if (d > 1) {
            out.amps[base - 1](1) += coined[k](1);
        }
        for (int c = 2; c < d; ++c) {
            out.amps[base](c) += coined[k](c);
        }
    }
    trim(out);
    return out;
}

RunResult run(const WalkProgram &prog, const CKet &coin_state) {
    WalkState s = initial_state(prog.dim, coin_state);
    for (const auto &layer : prog.layers) {
        s = step(s, layer.coins, layer.translate);
    }
    if (prog.post_layer) {
        s = step(s, *prog.post_layer, false);
    }
    RunResult result;
    result.state = std::move(s);
    for (size_t k = 0; k < result.state.amps.size(); ++k) {
        const double p = result.state.amps[k].squaredNorm();
        if (p > 0.0) {
            result.distribution[result.state.min_pos + static_cast<int>(k)] = p;
        }
    }
    return result;
}

InducedPovm induced_povm(const WalkProgram &prog) {
    const int d = prog.dim;
    // kraus[pos] column c = final coin amplitudes after evolving |0, c>.
    std::map<int, CMatrix> kraus;
    for (int c = 0; c < d; ++c) {
        CKet e = CKet::Zero(d);
        e(c) = 1.0;
        const RunResult r = run(prog, e);
        for (size_t k = 0; k < r.state.amps.size(); ++k) {
            if (r.state.amps[k].isZero(0.0)) {
                continue;
            }
            const int pos = r.state.min_pos + static_cast<int>(k);
            auto [it, fresh] = kraus.try_emplace(pos, CMatrix::Zero(d, d));
            it->second.col(c) = r.state.amps[k];
        }
    }
    InducedPovm omega;
    for (const auto &[pos, m] : kraus) {
        omega[pos] = m.adjoint() * m;
    }
    return omega;
}

std::pair<double, CKet> conditional_state(const WalkProgram &prog, const CKet &input,
                                          int position) {
    const RunResult r = run(prog, input);
    const CKet v = r.state.at(position);
    const double p = v.squaredNorm();
    if (p <= 1e-12) {
        throw NoAmplitudeError("conditional_state: no amplitude at requested position");
    }
    return {p, v / std::sqrt(p)};
}

std::map<int, std::int64_t> sample(const WalkProgram &prog, const CKet &input,
                                   std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw InvalidInputError("sample: shots must be >= 1");
    }
    const RunResult r = run(prog, input);
    std::vector<std::pair<int, double>> cdf;
    double acc = 0.0;
    for (const auto &[pos, p] : r.distribution) {
        acc += p;
        cdf.emplace_back(pos, acc);
    }
    std::mt19937_64 rng(seed);
    std::map<int, std::int64_t> hist;
    for (std::int64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double target = u * acc;
        auto it = std::lower_bound(cdf.begin(), cdf.end(), target,
                                   [](const auto &entry, double t) { return entry.second < t; });
        if (it == cdf.end()) {
            --it;
        }
        ++hist[it->first];
    }
    return hist;
}

}  // namespace walkpovm
