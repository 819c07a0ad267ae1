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

// walkpovm: compile POVMs into coined-walk schedules, simulate them, and
// check that the induced statistics reproduce the target measurement.
//
// Exit codes: 0 success; 1 semantic failure (invalid POVM, verification
// mismatch); 2 malformed input or infeasible synthesis. Standard output is
// line-oriented key=value.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkpovm/alt_synthesis.hpp"
#include "walkpovm/errors.hpp"
#include "walkpovm/povm.hpp"
#include "walkpovm/serialize.hpp"
#include "walkpovm/sic.hpp"
#include "walkpovm/synthesis.hpp"
#include "walkpovm/walk.hpp"

namespace {

using namespace walkpovm;

double max_abs(const CMatrix &m) { return m.cwiseAbs().maxCoeff(); }

int fail_malformed(const std::string &what) {
    std::cerr << "error: " << what << "\n";
    return 2;
}

int run_synthesize(const std::string &povm_path, const std::string &algo,
                   const std::string &out_path, double tol) {
    Povm p;
    try {
        p = povm_from_text(read_text_file(povm_path));
    } catch (const Error &e) {
        return fail_malformed(e.what());
    }
    ValidationReport rep = validate(p, tol);
    std::cout << "hermiticity_residual=" << rep.hermiticity_residual << "\n";
    std::cout << "psd_violation=" << rep.psd_violation << "\n";
    std::cout << "completeness_residual=" << rep.completeness_residual << "\n";
    if (!rep.pass) {
        std::cout << "status=invalid_povm\n";
        return 1;
    }
    WalkProgram prog;
    Rank1Povm r;
    try {
        r = decompose_rank1(p, tol);
        if (algo == "alt") {
            prog = synthesize_alt(r, tol).first;
        } else {
            prog = synthesize(r, tol).first;
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    // Schedule files carry original POVM outcome indices, not rank-1 item
    // indices, so readers never need the decomposition.
    std::map<int, int> by_source;
    for (const auto &[pos, item] : prog.outcome_positions) {
        by_source[pos] = r.outcome_map[item];
    }
    prog.outcome_positions = by_source;
    try {
        write_text_file(out_path, schedule_to_text(prog));
    } catch (const Error &e) {
        return fail_malformed(e.what());
    }
    std::cout << "layers=" << prog.layers.size() << "\n";
    std::cout << "outcomes=" << p.elements.size() << "\n";
    for (const auto &[pos, outcome] : prog.outcome_positions) {
        std::cout << "outcome[" << pos << "]=" << outcome << "\n";
    }
    std::cout << "written=" << out_path << "\n";
    std::cout << "status=ok\n";
    return 0;
}

int run_verify(const std::string &povm_path, const std::string &schedule_path, double tol) {
    Povm p;
    WalkProgram prog;
    try {
        p = povm_from_text(read_text_file(povm_path));
        prog = schedule_from_text(read_text_file(schedule_path));
    } catch (const Error &e) {
        return fail_malformed(e.what());
    }
    if (p.dim != prog.dim) {
        std::cout << "status=mismatch\n";
        std::cerr << "error: POVM dimension " << p.dim << " != schedule dimension "
                  << prog.dim << "\n";
        return 1;
    }
    InducedPovm induced;
    try {
        induced = induced_povm(prog);
    } catch (const Error &e) {
        return fail_malformed(e.what());
    }
    const int n = static_cast<int>(p.elements.size());
    std::map<int, CMatrix> grouped;
    double deviation = 0.0;
    for (const auto &[pos, omega] : induced) {
        auto it = prog.outcome_positions.find(pos);
        if (it == prog.outcome_positions.end()) {
            // Mass leaking to an unlisted position counts against the match.
            deviation = std::max(deviation, max_abs(omega));
            continue;
        }
        if (it->second < 0 || it->second >= n) {
            std::cout << "status=mismatch\n";
            std::cerr << "error: outcome index " << it->second << " out of range\n";
            return 1;
        }
        auto [g, inserted] = grouped.try_emplace(it->second, omega);
        if (!inserted) {
            g->second += omega;
        }
    }
    for (int i = 0; i < n; ++i) {
        auto it = grouped.find(i);
        CMatrix target = p.elements[i];
        double d = (it == grouped.end()) ? max_abs(target) : max_abs(it->second - target);
        deviation = std::max(deviation, d);
    }
    std::cout << "max_deviation=" << deviation << "\n";
    std::cout << "status=" << (deviation <= tol ? "ok" : "mismatch") << "\n";
    return deviation <= tol ? 0 : 1;
}

int run_simulate(const std::string &schedule_path, const std::string &state_path,
                 std::int64_t shots, std::uint64_t seed) {
    WalkProgram prog;
    CKet coin_state;
    try {
        prog = schedule_from_text(read_text_file(schedule_path));
        if (state_path.empty()) {
            coin_state = CKet::Zero(prog.dim);
            coin_state(0) = 1.0;
        } else {
            coin_state = state_from_text(read_text_file(state_path));
        }
        if (static_cast<int>(coin_state.size()) != prog.dim) {
            throw FileFormatError("state dimension does not match schedule");
        }
        RunResult res = run(prog, coin_state);
        for (const auto &[pos, prob] : res.distribution) {
            if (prob > 1e-12) {
                std::cout << "p[" << pos << "]=" << prob << "\n";
            }
        }
        if (shots > 0) {
            auto hist = sample(prog, coin_state, shots, seed);
            for (const auto &[pos, count] : hist) {
                if (count > 0) {
                    std::cout << "count[" << pos << "]=" << count << "\n";
                }
            }
        }
        std::cout << "status=ok\n";
        return 0;
    } catch (const Error &e) {
        return fail_malformed(e.what());
    }
}

int run_sic(const std::string &action, double t, const std::string &out_path, double tol) {
    if (action == "emit-povm" || action == "emit-schedule") {
        if (out_path.empty()) {
            return fail_malformed("--out is required for " + action);
        }
        try {
            const std::string text = (action == "emit-povm")
                                         ? povm_to_text(sic_povm(t))
                                         : schedule_to_text(paper_schedule(t));
            write_text_file(out_path, text);
        } catch (const Error &e) {
            return fail_malformed(e.what());
        }
        std::cout << "written=" << out_path << "\n";
        std::cout << "status=ok\n";
        return 0;
    }

    // action == "verify": sweep a 12-point grid plus the requested t.
    std::vector<double> grid;
    for (int k = 0; k < 12; ++k) {
        grid.push_back(2.0 * std::numbers::pi * k / 12.0);
    }
    grid.push_back(t);
    double worst = 0.0;
    for (double tk : grid) {
        const auto states = sic_states(tk);
        for (int i = 0; i < 9; ++i) {
            for (int j = 0; j < 9; ++j) {
                double fid = std::norm(states[i].dot(states[j]));
                double want = (i == j) ? 1.0 : 0.25;
                worst = std::max(worst, std::abs(fid - want));
            }
        }
        const Povm p = sic_povm(tk);
        if (!validate(p, 1e-10).pass) {
            std::cout << "status=fail\n";
            std::cerr << "error: SIC POVM failed validation at t=" << tk << "\n";
            return 1;
        }
        const WalkProgram prog = paper_schedule(tk);
        if (prog.layers.size() != 16) {
            std::cout << "status=fail\n";
            std::cerr << "error: schedule has " << prog.layers.size() << " layers\n";
            return 1;
        }
        const InducedPovm induced = induced_povm(prog);
        for (const auto &[pos, outcome] : prog.outcome_positions) {
            auto it = induced.find(pos);
            CMatrix omega = (it == induced.end()) ? CMatrix::Zero(3, 3).eval() : it->second;
            worst = std::max(worst, max_abs(omega - p.elements[outcome]));
        }
        // Boundary-outcome probabilities have closed forms in the input
        // amplitudes; check them on the coin basis and one superposition.
        std::vector<CKet> probes;
        for (int c = 0; c < 3; ++c) {
            CKet e = CKet::Zero(3);
            e(c) = 1.0;
            probes.push_back(e);
        }
        CKet mix(3);
        mix << Complex(0.5, 0.0), Complex(0.0, 0.5), Complex(1.0 / std::sqrt(2.0), 0.0);
        probes.push_back(mix);
        const Complex q4 = std::polar(1.0, 4.0 * std::numbers::pi / 6.0);
        const Complex eit = std::polar(1.0, -tk);
        for (const auto &probe : probes) {
            RunResult res = run(prog, probe);
            const Complex a = probe(0), b = probe(1), c = probe(2);
            double want16 = std::norm(b - c * eit) / 6.0;
            double want0 = std::norm(a / q4 - b * eit) / 6.0;
            auto at = [&](int pos) {
                auto it = res.distribution.find(pos);
                return it == res.distribution.end() ? 0.0 : it->second;
            };
            worst = std::max(worst, std::abs(at(16) - want16));
            worst = std::max(worst, std::abs(at(0) - want0));
        }
    }
    std::cout << "checked_t_values=" << grid.size() << "\n";
    std::cout << "max_deviation=" << worst << "\n";
    if (worst > tol) {
        std::cout << "status=fail\n";
        return 1;
    }
    std::cout << "status=ok\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"POVMs as coined quantum walks: synthesis, simulation, verification"};
    app.require_subcommand(1);

    std::string povm_path, schedule_path, state_path, out_path;
    std::string algo = "main";
    double syn_tol = 1e-10;
    double verify_tol = 1e-9;
    double sic_tol = 1e-9;
    double t = 0.0;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    std::string sic_action;

    auto *syn = app.add_subcommand("synthesize", "Compile a POVM file into a walk schedule");
    syn->add_option("--povm", povm_path, "POVM input file")->required();
    syn->add_option("--out", out_path, "schedule output file")->required();
    syn->add_option("--algo", algo, "main | alt")->check(CLI::IsMember({"main", "alt"}));
    syn->add_option("--tol", syn_tol, "validation tolerance");

    auto *ver = app.add_subcommand("verify", "Check a schedule against a POVM file");
    ver->add_option("--povm", povm_path, "POVM input file")->required();
    ver->add_option("--schedule", schedule_path, "schedule input file")->required();
    ver->add_option("--tol", verify_tol, "max allowed deviation");

    auto *sim = app.add_subcommand("simulate", "Run a schedule on an input coin state");
    sim->add_option("--schedule", schedule_path, "schedule input file")->required();
    sim->add_option("--state", state_path, "coin state file (default |0>)");
    sim->add_option("--shots", shots, "number of samples (0 = exact only)");
    sim->add_option("--seed", seed, "sampling seed");

    auto *sic = app.add_subcommand("sic", "Qutrit SIC-POVM family tools");
    sic->add_option("action", sic_action, "emit-povm | emit-schedule | verify")
        ->required()
        ->check(CLI::IsMember({"emit-povm", "emit-schedule", "verify"}));
    sic->add_option("--t", t, "family parameter");
    sic->add_option("--out", out_path, "output file for emit actions");
    sic->add_option("--tol", sic_tol, "verification tolerance");

    CLI11_PARSE(app, argc, argv);

    std::cout.precision(17);
    try {
        if (syn->parsed()) {
            return run_synthesize(povm_path, algo, out_path, syn_tol);
        }
        if (ver->parsed()) {
            return run_verify(povm_path, schedule_path, verify_tol);
        }
        if (sim->parsed()) {
            return run_simulate(schedule_path, state_path, shots, seed);
        }
        return run_sic(sic_action, t, out_path, sic_tol);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
