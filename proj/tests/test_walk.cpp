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

#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "walkpovm/errors.hpp"
#include "walkpovm/synthesis.hpp"
#include "walkpovm/walk.hpp"

using namespace walkpovm;
using testsupport::max_abs;

namespace {

CKet basis_ket(int d, int c) {
    CKet e = CKet::Zero(d);
    e(c) = 1.0;
    return e;
}

// Random small program: Haar coins at a few positions, 4 layers.
WalkProgram random_program(int d, std::mt19937_64 &gen) {
    WalkProgram prog;
    prog.dim = d;
    for (int l = 0; l < 4; ++l) {
        ProgramLayer layer;
        for (int pos = -1; pos <= l; ++pos) {
            if (gen() % 2 == 0) {
                layer.coins[pos] = testsupport::haar_unitary(d, gen);
            }
        }
        prog.layers.push_back(layer);
    }
    return prog;
}

}  // namespace

TEST_CASE("coin 0 moves the walker up", "[walk]") {
    WalkState s = initial_state(3, basis_ket(3, 0));
    WalkState out = step(s, {}, true);
    REQUIRE(std::abs(out.at(1)(0) - Complex(1.0, 0.0)) == 0.0);
    REQUIRE(out.at(0).norm() == 0.0);
}

TEST_CASE("coins beyond the first two stand still", "[walk]") {
    WalkState s = initial_state(3, basis_ket(3, 2));
    WalkState out = step(s, {}, true);
    REQUIRE(std::abs(out.at(0)(2) - Complex(1.0, 0.0)) == 0.0);
}

TEST_CASE("a NOT coin turns a down-mover into an up-mover", "[walk]") {
    WalkState s = initial_state(3, basis_ket(3, 1));
    CoinLayer layer;
    layer[0] = not_coin(3);
    WalkState out = step(s, layer, true);
    REQUIRE(std::abs(out.at(1)(0) - Complex(1.0, 0.0)) == 0.0);
}

TEST_CASE("non-unitary coins are rejected", "[walk]") {
    WalkState s = initial_state(2, basis_ket(2, 0));
    CoinLayer layer;
    layer[0] = CMatrix::Identity(2, 2) * 2.0;
    REQUIRE_THROWS_AS(step(s, layer, true), InvalidInputError);
}

TEST_CASE("steps preserve the norm", "[walk]") {
    std::mt19937_64 gen(301);
    WalkState s = initial_state(3, testsupport::random_ket(3, gen));
    for (int l = 0; l < 20; ++l) {
        CoinLayer layer;
        layer[s.min_pos + static_cast<int>(gen() % 3)] = testsupport::haar_unitary(3, gen);
        s = step(s, layer, true);
        REQUIRE(std::abs(s.total_norm2() - 1.0) < 1e-12);
    }
}

TEST_CASE("the six-layer fixture distributes mass evenly", "[walk]") {
    RunResult res = run(testsupport::tetrahedron_schedule(), basis_ket(3, 0));
    // Born route: 0.75 |<0|psi_i>|^2 = 1/4 for every element
    auto states = testsupport::tetrahedron_states();
    for (int i = 0; i < 4; ++i) {
        double born = 0.75 * std::norm(states[i](0));
        int pos = 6 - 2 * i;
        REQUIRE(std::abs(res.distribution.at(pos) - born) < 1e-12);
    }
}

TEST_CASE("an empty program leaves the walker at the origin", "[walk]") {
    WalkProgram prog;
    prog.dim = 2;
    RunResult res = run(prog, basis_ket(2, 1));
    REQUIRE(std::abs(res.distribution.at(0) - 1.0) == 0.0);
}

TEST_CASE("the fixture induces its source measurement", "[walk]") {
    InducedPovm ind = induced_povm(testsupport::tetrahedron_schedule());
    Povm p = testsupport::tetrahedron_povm();
    for (int i = 0; i < 4; ++i) {
        REQUIRE(max_abs(ind.at(6 - 2 * i) - p.elements[i]) < 1e-10);
    }
}

TEST_CASE("an empty program induces the identity at the origin", "[walk]") {
    WalkProgram prog;
    prog.dim = 3;
    InducedPovm ind = induced_povm(prog);
    REQUIRE(ind.size() == 1);
    REQUIRE(max_abs(ind.at(0) - CMatrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("induced elements always resolve the identity", "[walk]") {
    std::mt19937_64 gen(302);
    for (int trial = 0; trial < 5; ++trial) {
        InducedPovm ind = induced_povm(random_program(3, gen));
        CMatrix sum = CMatrix::Zero(3, 3);
        for (const auto &[pos, omega] : ind) {
            sum += omega;
            REQUIRE(max_abs(omega - omega.adjoint()) < 1e-12);
        }
        REQUIRE(max_abs(sum - CMatrix::Identity(3, 3)) < 1e-10);
    }
}

TEST_CASE("run probabilities agree with the induced elements", "[walk]") {
    std::mt19937_64 gen(303);
    WalkProgram prog = random_program(3, gen);
    InducedPovm ind = induced_povm(prog);
    for (int trial = 0; trial < 10; ++trial) {
        CKet phi = testsupport::random_ket(3, gen);
        RunResult res = run(prog, phi);
        for (const auto &[pos, omega] : ind) {
            double born = (phi.adjoint() * omega * phi)(0, 0).real();
            double walked = res.distribution.count(pos) ? res.distribution.at(pos) : 0.0;
            REQUIRE(std::abs(born - walked) < 1e-10);
        }
    }
}

TEST_CASE("conditional state at the top outcome of the fixture", "[walk]") {
    auto states = testsupport::tetrahedron_states();
    auto [prob, coin] = conditional_state(testsupport::tetrahedron_schedule(), states[0], 6);
    REQUIRE(std::abs(prob - 0.75) < 1e-12);
    REQUIRE(std::abs(std::abs(coin(0)) - 1.0) < 1e-10);
}

TEST_CASE("conditional state of the empty program is the input", "[walk]") {
    WalkProgram prog;
    prog.dim = 2;
    auto [prob, coin] = conditional_state(prog, basis_ket(2, 1), 0);
    REQUIRE(prob == 1.0);
    REQUIRE(std::abs(coin(1)) == 1.0);
}

TEST_CASE("conditional state on an empty position is an error", "[walk]") {
    WalkProgram prog;
    prog.dim = 2;
    REQUIRE_THROWS_AS(conditional_state(prog, basis_ket(2, 0), 5), NoAmplitudeError);
}

TEST_CASE("single-shot histograms hold one sample", "[walk]") {
    auto hist = sample(testsupport::tetrahedron_schedule(), basis_ket(3, 0), 1, 42);
    std::int64_t total = 0;
    for (const auto &[pos, count] : hist) {
        total += count;
    }
    REQUIRE(total == 1);
}

TEST_CASE("sampling is reproducible under a fixed seed", "[walk]") {
    WalkProgram prog = testsupport::tetrahedron_schedule();
    auto h1 = sample(prog, basis_ket(3, 0), 1000, 7);
    auto h2 = sample(prog, basis_ket(3, 0), 1000, 7);
    REQUIRE(h1 == h2);
}

TEST_CASE("large-sample frequencies track the exact distribution", "[walk]") {
    const std::int64_t shots = 1000000;
    auto hist = sample(testsupport::tetrahedron_schedule(), basis_ket(3, 0), shots, 12345);
    const double p = 0.25;
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
    for (int pos : {0, 2, 4, 6}) {
        double freq = static_cast<double>(hist.at(pos)) / static_cast<double>(shots);
        REQUIRE(std::abs(freq - p) < 5.0 * sigma);
    }
}

TEST_CASE("outcome mass reaches its ladder position right after its iteration", "[walk]") {
    std::mt19937_64 gen(304);
    Rank1Povm r = testsupport::random_rank1_povm(3, 6, gen);
    auto [prog, trace] = synthesize(r);
    const int n = static_cast<int>(r.items.size());
    for (int trial = 0; trial < 3; ++trial) {
        CKet phi = testsupport::random_ket(3, gen);
        RunResult full = run(prog, phi);
        for (int j = 1; j <= n - 1; ++j) {
            // replay only the first j iterations
            WalkProgram prefix;
            prefix.dim = prog.dim;
            prefix.layers.assign(prog.layers.begin(), prog.layers.begin() + 2 * j);
            RunResult part = run(prefix, phi);
            double early = part.distribution.count(2) ? part.distribution.at(2) : 0.0;
            double final_mass = full.distribution.count(2 * (n - j))
                                    ? full.distribution.at(2 * (n - j))
                                    : 0.0;
            REQUIRE(std::abs(early - final_mass) < 1e-10);
        }
    }
}

TEST_CASE("synthesized walks never reach below the floor position", "[walk]") {
    std::mt19937_64 gen(305);
    Rank1Povm r = testsupport::random_rank1_povm(3, 5, gen);
    auto [prog, trace] = synthesize(r);
    WalkState s = initial_state(3, testsupport::random_ket(3, gen));
    for (const auto &layer : prog.layers) {
        s = step(s, layer.coins, layer.translate);
        REQUIRE(s.min_pos >= -1);  // exact: trimming only removes exact zeros
    }
}
