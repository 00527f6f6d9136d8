// Copyright 2026 The shordecoh Authors
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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "shordecoh/errors.h"
#include "shordecoh/spectrum.h"

namespace shordecoh {

namespace {

constexpr uint64_t kMaxEigenDimension = 4096;

}  // namespace

std::vector<double> conditional_state_eigenvalues(const ProblemInstance &instance, uint64_t k,
                                                  const Kernel &kernel) {
    IndexSet set = index_set(instance, k);
    if (set.count > kMaxEigenDimension) {
        throw ResourceLimit("M_k=" + std::to_string(set.count) + " exceeds the eigensolver guard");
    }
    const auto m = static_cast<Eigen::Index>(set.count);
    Eigen::MatrixXd rho(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            rho(i, j) = kernel.weight(set[i], set[j]) / static_cast<double>(m);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver did not converge");
    }
    const Eigen::VectorXd &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> constant_beta_eigenvalues(uint64_t m, double beta) {
    if (m == 0) {
        throw DomainError("empty index set");
    }
    const double md = static_cast<double>(m);
    std::vector<double> out(m, beta / md);
    out.back() = ((1 - beta) * md + beta) / md;
    std::sort(out.begin(), out.end());
    return out;
}

EntropyReport von_neumann_entropy(const ProblemInstance &instance, uint64_t k,
                                  const Kernel &kernel) {
    IndexSet set = index_set(instance, k);
    if (set.count < 2) {
        throw DomainError("entropy fraction needs M_k >= 2");
    }
    auto eigenvalues = conditional_state_eigenvalues(instance, k, kernel);
    double s = 0;
    for (double lambda : eigenvalues) {
        // Tiny negative eigenvalues are round-off of a PSD matrix.
        if (lambda > 0) {
            s -= lambda * std::log(lambda);
        }
    }
    EntropyReport out;
    out.entropy = std::max(0.0, s);
    out.max_entropy = std::log(static_cast<double>(set.count));
    out.fraction = out.entropy / out.max_entropy;
    return out;
}

}  // namespace shordecoh
