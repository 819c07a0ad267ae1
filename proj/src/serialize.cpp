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

#include "walkpovm/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "walkpovm/errors.hpp"

namespace walkpovm {

namespace {

using nlohmann::json;

json complex_to_json(const Complex &z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FileFormatError("entry is not a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const CMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json &j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        throw FileFormatError("matrix does not have dim rows");
    }
    CMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const json &row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw FileFormatError("matrix row does not have dim entries");
        }
        for (int c = 0; c < dim; ++c) {
            m(r, c) = complex_from_json(row[c]);
        }
    }
    return m;
}

int dim_from_json(const json &j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw FileFormatError("missing integer field 'dim'");
    }
    int dim = j["dim"].get<int>();
    if (dim < 1) {
        throw FileFormatError("'dim' must be positive");
    }
    return dim;
}

json parse(const std::string &text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw FileFormatError("not valid JSON");
    }
    return j;
}

json coin_layer_to_json(const CoinLayer &coins) {
    json arr = json::array();
    for (const auto &[pos, coin] : coins) {
        json entry;
        entry["position"] = pos;
        entry["matrix"] = matrix_to_json(coin);
        arr.push_back(std::move(entry));
    }
    return arr;
}

CoinLayer coin_layer_from_json(const json &j, int dim) {
    if (!j.is_array()) {
        throw FileFormatError("coin list is not an array");
    }
    CoinLayer coins;
    for (const json &entry : j) {
        if (!entry.is_object() || !entry.contains("position") ||
            !entry["position"].is_number_integer() || !entry.contains("matrix")) {
            throw FileFormatError("coin entry needs 'position' and 'matrix'");
        }
        int pos = entry["position"].get<int>();
        if (coins.count(pos)) {
            throw FileFormatError("duplicate coin position");
        }
        coins[pos] = matrix_from_json(entry["matrix"], dim);
    }
    return coins;
}

}  // namespace

std::string povm_to_text(const Povm &p) {
    json j;
    j["dim"] = p.dim;
    json elems = json::array();
    for (const auto &e : p.elements) {
        elems.push_back(matrix_to_json(e));
    }
    j["elements"] = std::move(elems);
    return j.dump(2) + "\n";
}

Povm povm_from_text(const std::string &text) {
    json j = parse(text);
    if (!j.is_object()) {
        throw FileFormatError("top level is not an object");
    }
    Povm p;
    p.dim = dim_from_json(j);
    if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty()) {
        throw FileFormatError("missing non-empty 'elements' list");
    }
    for (const json &e : j["elements"]) {
        p.elements.push_back(matrix_from_json(e, p.dim));
    }
    return p;
}

std::string schedule_to_text(const WalkProgram &prog) {
    json j;
    j["dim"] = prog.dim;
    json layers = json::array();
    for (const auto &layer : prog.layers) {
        json jl;
        jl["translate"] = layer.translate;
        jl["coins"] = coin_layer_to_json(layer.coins);
        layers.push_back(std::move(jl));
    }
    j["layers"] = std::move(layers);
    json outs = json::array();
    for (const auto &[pos, outcome] : prog.outcome_positions) {
        json jo;
        jo["position"] = pos;
        jo["outcome"] = outcome;
        outs.push_back(std::move(jo));
    }
    j["outcome_positions"] = std::move(outs);
    if (prog.post_layer) {
        j["post_layer"] = coin_layer_to_json(*prog.post_layer);
    }
    return j.dump(2) + "\n";
}

WalkProgram schedule_from_text(const std::string &text) {
    json j = parse(text);
    if (!j.is_object()) {
        throw FileFormatError("top level is not an object");
    }
    WalkProgram prog;
    prog.dim = dim_from_json(j);
    if (!j.contains("layers") || !j["layers"].is_array()) {
        throw FileFormatError("missing 'layers' list");
    }
    for (const json &jl : j["layers"]) {
        if (!jl.is_object() || !jl.contains("translate") || !jl["translate"].is_boolean() ||
            !jl.contains("coins")) {
            throw FileFormatError("layer needs 'translate' and 'coins'");
        }
        ProgramLayer layer;
        layer.translate = jl["translate"].get<bool>();
        layer.coins = coin_layer_from_json(jl["coins"], prog.dim);
        prog.layers.push_back(std::move(layer));
    }
    if (!j.contains("outcome_positions") || !j["outcome_positions"].is_array()) {
        throw FileFormatError("missing 'outcome_positions' list");
    }
    for (const json &jo : j["outcome_positions"]) {
        if (!jo.is_object() || !jo.contains("position") ||
            !jo["position"].is_number_integer() || !jo.contains("outcome") ||
            !jo["outcome"].is_number_integer()) {
            throw FileFormatError("outcome entry needs 'position' and 'outcome'");
        }
        int pos = jo["position"].get<int>();
        if (prog.outcome_positions.count(pos)) {
            throw FileFormatError("duplicate outcome position");
        }
        prog.outcome_positions[pos] = jo["outcome"].get<int>();
    }
    if (j.contains("post_layer")) {
        prog.post_layer = coin_layer_from_json(j["post_layer"], prog.dim);
    }
    return prog;
}

std::string state_to_text(const CKet &psi) {
    json j;
    j["dim"] = static_cast<int>(psi.size());
    json amps = json::array();
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        amps.push_back(complex_to_json(psi(i)));
    }
    j["amplitudes"] = std::move(amps);
    return j.dump(2) + "\n";
}

CKet state_from_text(const std::string &text) {
    json j = parse(text);
    if (!j.is_object()) {
        throw FileFormatError("top level is not an object");
    }
    int dim = dim_from_json(j);
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array() ||
        static_cast<int>(j["amplitudes"].size()) != dim) {
        throw FileFormatError("'amplitudes' must list dim entries");
    }
    CKet psi(dim);
    for (int i = 0; i < dim; ++i) {
        psi(i) = complex_from_json(j["amplitudes"][i]);
    }
    return psi;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileFormatError("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FileFormatError("cannot open file for writing: " + path);
    }
    out << text;
    if (!out) {
        throw FileFormatError("write failed: " + path);
    }
}

}  // namespace walkpovm
