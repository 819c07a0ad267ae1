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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "walkpovm/errors.hpp"
#include "walkpovm/serialize.hpp"
#include "walkpovm/synthesis.hpp"

using namespace walkpovm;
using testsupport::max_abs;

TEST_CASE("measurement files round-trip byte for byte", "[serialize]") {
    Povm p = testsupport::tetrahedron_povm();
    std::string text = povm_to_text(p);
    Povm back = povm_from_text(text);
    REQUIRE(back.dim == 3);
    REQUIRE(back.elements.size() == 4);
    for (int i = 0; i < 4; ++i) {
        REQUIRE(max_abs(back.elements[i] - p.elements[i]) == 0.0);
    }
    REQUIRE(povm_to_text(back) == text);
}

TEST_CASE("random measurement files survive the round trip", "[serialize]") {
    std::mt19937_64 gen(701);
    for (int trial = 0; trial < 5; ++trial) {
        Povm p = testsupport::random_mixed_rank_povm(3, 5, gen);
        std::string text = povm_to_text(p);
        REQUIRE(povm_to_text(povm_from_text(text)) == text);
    }
}

TEST_CASE("schedule files round-trip byte for byte", "[serialize]") {
    Rank1Povm r = decompose_rank1(testsupport::tetrahedron_povm());
    auto [prog, trace] = synthesize(r);
    std::string text = schedule_to_text(prog);
    WalkProgram back = schedule_from_text(text);
    REQUIRE(back.dim == prog.dim);
    REQUIRE(back.layers.size() == prog.layers.size());
    for (size_t l = 0; l < prog.layers.size(); ++l) {
        REQUIRE(back.layers[l].translate == prog.layers[l].translate);
        REQUIRE(back.layers[l].coins.size() == prog.layers[l].coins.size());
        for (const auto &[pos, coin] : prog.layers[l].coins) {
            REQUIRE(max_abs(back.layers[l].coins.at(pos) - coin) == 0.0);
        }
    }
    REQUIRE(back.outcome_positions == prog.outcome_positions);
    REQUIRE_FALSE(back.post_layer.has_value());
    REQUIRE(schedule_to_text(back) == text);
}

TEST_CASE("the trailing coin layer survives the round trip", "[serialize]") {
    Rank1Povm r = decompose_rank1(testsupport::tetrahedron_povm());
    auto [prog, trace] = synthesize(r);
    WalkProgram ext = extend_post_measurement(prog, trace, testsupport::tetrahedron_states());
    std::string text = schedule_to_text(ext);
    WalkProgram back = schedule_from_text(text);
    REQUIRE(back.post_layer.has_value());
    REQUIRE(back.post_layer->size() == ext.post_layer->size());
    REQUIRE(schedule_to_text(back) == text);
}

TEST_CASE("state files round-trip byte for byte", "[serialize]") {
    std::mt19937_64 gen(702);
    CKet psi = testsupport::random_ket(4, gen);
    std::string text = state_to_text(psi);
    CKet back = state_from_text(text);
    REQUIRE((back - psi).norm() == 0.0);
    REQUIRE(state_to_text(back) == text);
}

TEST_CASE("malformed documents are rejected", "[serialize]") {
    REQUIRE_THROWS_AS(povm_from_text("not json at all"), FileFormatError);
    REQUIRE_THROWS_AS(povm_from_text("[1,2,3]"), FileFormatError);
    REQUIRE_THROWS_AS(povm_from_text(R"({"elements": []})"), FileFormatError);
    REQUIRE_THROWS_AS(povm_from_text(R"({"dim": 2, "elements": [[[0.0]]]})"),
                      FileFormatError);
    REQUIRE_THROWS_AS(povm_from_text(R"({"dim": 0, "elements": []})"), FileFormatError);
    REQUIRE_THROWS_AS(
        schedule_from_text(R"({"dim": 2, "layers": [{"coins": []}]})"), FileFormatError);
    REQUIRE_THROWS_AS(
        schedule_from_text(R"({"dim": 2, "layers": [], "outcome_positions": [1]})"),
        FileFormatError);
    REQUIRE_THROWS_AS(state_from_text(R"({"dim": 2, "amplitudes": [[0.0, 0.0]]})"),
                      FileFormatError);
}

TEST_CASE("duplicate coin positions are rejected", "[serialize]") {
    const char *text = R"({
      "dim": 1,
      "layers": [{"translate": true,
                  "coins": [{"position": 0, "matrix": [[[1.0, 0.0]]]},
                            {"position": 0, "matrix": [[[1.0, 0.0]]]}]}],
      "outcome_positions": []
    })";
    REQUIRE_THROWS_AS(schedule_from_text(text), FileFormatError);
}

TEST_CASE("non-representable decimals still round-trip exactly", "[serialize]") {
    Povm p;
    p.dim = 1;
    CMatrix e(1, 1);
    e(0, 0) = Complex(1.0 / 3.0, -2.0 / 7.0);
    p.elements.push_back(e);
    Povm back = povm_from_text(povm_to_text(p));
    REQUIRE(back.elements[0](0, 0) == e(0, 0));
}
