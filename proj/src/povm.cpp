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

#include "walkpovm/povm.hpp"

#include <algorithm>
#include <cmath>

#include "walkpovm/errors.hpp"

namespace walkpovm {

namespace {

// Lexicographic order on amplitude vectors: real part, then imaginary.
bool lex_less(const CKet &a, const CKet &b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i).real() != b(i).real()) {
            return a(i).real() < b(i).real();
        }
        if (a(i).imag() != b(i).imag()) {
            return a(i).imag() < b(i).imag();
        }
    }
    return false;
}

}  // namespace

ValidationReport validate(const Povm &p, double tol) {
    if (p.dim < 1) {
        throw InvalidInputError("validate: dim must be >= 1");
    }
    if (p.elements.empty()) {
        throw InvalidInputError("validate: POVM has no elements");
    }
    ValidationReport report;
    CMatrix sum = CMatrix::Zero(p.dim, p.dim);
    for (const auto &e : p.elements) {
        if (e.rows() != p.dim || e.cols() != p.dim) {
            throw InvalidInputError("validate: element dimension mismatch");
        }
        detail::require_finite(e, "validate");
        report.hermiticity_residual = std::max(
            report.hermiticity_residual, (e - e.adjoint()).cwiseAbs().maxCoeff());
        Eigen::SelfAdjointEigenSolver<CMatrix> es((e + e.adjoint()) / 2.0);
        const double min_eig = es.eigenvalues().minCoeff();
        report.psd_violation = std::max(report.psd_violation, std::max(0.0, -min_eig));
        sum += e;
    }
    report.completeness_residual =
        (sum - CMatrix::Identity(p.dim, p.dim)).cwiseAbs().maxCoeff();
    report.pass = report.hermiticity_residual <= tol &&
                  report.psd_violation <= tol &&
                  report.completeness_residual <= tol;
    return report;
}

std::vector<double> born_probabilities(const Povm &p, const CKet &state, double tol) {
    if (state.size() != p.dim) {
        throw InvalidInputError("born_probabilities: state dimension mismatch");
    }
    CMatrix rho = state * state.adjoint();
    return born_probabilities(p, rho, tol);
}

std::vector<double> born_probabilities(const Povm &p, const CMatrix &rho, double tol) {
    if (!validate(p, tol).pass) {
        throw InvalidInputError("born_probabilities: POVM fails validation");
    }
    if (rho.rows() != p.dim || rho.cols() != p.dim) {
        throw InvalidInputError("born_probabilities: state dimension mismatch");
    }
    detail::require_finite(rho, "born_probabilities");
    if (std::abs(rho.trace().real() - 1.0) > tol * p.dim ||
        std::abs(rho.trace().imag()) > tol * p.dim) {
        throw InvalidInputError("born_probabilities: state is not normalized");
    }
    std::vector<double> probs;
    probs.reserve(p.elements.size());
    double total = 0.0;
    for (const auto &e : p.elements) {
        const double pr = (rho * e).trace().real();
        if (pr < -tol) {
            throw InvalidInputError("born_probabilities: negative probability beyond tol");
        }
        probs.push_back(std::max(pr, 0.0));
        total += probs.back();
    }
    if (std::abs(total - 1.0) > tol * static_cast<double>(p.elements.size() + 1)) {
        throw InvalidInputError("born_probabilities: probabilities do not sum to 1");
    }
    return probs;
}

Rank1Povm decompose_rank1(const Povm &p, double tol) {
    const ValidationReport report = validate(p, tol);
    if (!report.pass) {
        throw InvalidInputError("decompose_rank1: POVM fails validation");
    }
    Rank1Povm out;
    out.dim = p.dim;
    for (size_t idx = 0; idx < p.elements.size(); ++idx) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(
            (p.elements[idx] + p.elements[idx].adjoint()) / 2.0);
        std::vector<std::pair<double, CKet>> pairs;
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            const double a = es.eigenvalues()(k);
            if (a > 1.0 + tol) {
                throw InvalidInputError("decompose_rank1: eigenvalue exceeds 1");
            }
            if (a > tol) {
                pairs.emplace_back(std::min(a, 1.0), canonical_phase(es.eigenvectors().col(k)));
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](const auto &x, const auto &y) {
            if (x.first != y.first) {
                return x.first > y.first;
            }
            return lex_less(x.second, y.second);
        });
        for (auto &[a, psi] : pairs) {
            out.items.push_back({a, psi});
            out.outcome_map.push_back(static_cast<int>(idx));
        }
    }
    return out;
}

Povm regroup(const Rank1Povm &r, int n_outcomes) {
    if (static_cast<int>(r.items.size()) != static_cast<int>(r.outcome_map.size())) {
        throw InvalidInputError("regroup: items and outcome_map sizes differ");
    }
    Povm p;
    p.dim = r.dim;
    p.elements.assign(n_outcomes, CMatrix::Zero(r.dim, r.dim));
    for (size_t k = 0; k < r.items.size(); ++k) {
        const int o = r.outcome_map[k];
        if (o < 0 || o >= n_outcomes) {
            throw InvalidInputError("regroup: outcome index out of range");
        }
        p.elements[o] += r.items[k].weight * r.items[k].state * r.items[k].state.adjoint();
    }
    return p;
}

}  // namespace walkpovm
