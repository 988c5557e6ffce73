// Copyright 2026 The qctx Authors
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

#include "qctx/error.hpp"
#include "qctx/invariants.hpp"

namespace qctx {

namespace {

using Matrix = Eigen::MatrixXd;

// Splits a symmetric matrix into its positive and negative spectral parts.
void psd_split(const Matrix &v, Matrix &positive, Matrix &negative) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(v);
    const auto &vals = es.eigenvalues();
    const auto &vecs = es.eigenvectors();
    Eigen::VectorXd pos = vals.cwiseMax(0.0);
    Eigen::VectorXd neg = (-vals).cwiseMax(0.0);
    positive = vecs * pos.asDiagonal() * vecs.transpose();
    negative = vecs * neg.asDiagonal() * vecs.transpose();
}

double lambda_max(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

}  // namespace

ThetaResult lovasz_theta(const Graph &g, const ThetaOptions &options) {
    const std::size_t n = g.size();
    if (n > options.max_vertices) {
        throw Error(ErrorCode::BudgetExceeded,
                    "theta SDP is capped at " + std::to_string(options.max_vertices) + " vertices");
    }
    ThetaResult r;
    if (n == 0) {
        r.status = SolveStatus::exact;
        return r;
    }
    const auto edges = g.edges();
    if (edges.empty()) {
        r.value = r.lower = r.upper = static_cast<double>(n);
        r.status = SolveStatus::exact;
        return r;
    }
    const Deadline deadline = Deadline::after_seconds(options.budget_seconds);
    const Eigen::Index N = static_cast<Eigen::Index>(n);
    const Matrix J = Matrix::Ones(N, N);
    const Matrix C = -J;

    // Standard form min <C,X>, A(X) = b, X psd with A(X) = (Tr X, 2 X_e for e in E)
    // and b = (1, 0, ...). A A^* is diagonal: n for the trace row, 2 for edges.
    Matrix X = Matrix::Identity(N, N) / static_cast<double>(n);
    Matrix S = Matrix::Zero(N, N);
    double y0 = 0;
    std::vector<double> ye(edges.size(), 0.0);
    double mu = 1.0;

    double best_lower = 0, best_upper = static_cast<double>(n);
    auto certify = [&] {
        // Upper: lambda_max(J + sum_e y_e A_e) bounds theta for any edge weights.
        Matrix dual = J;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            dual(edges[e].first, edges[e].second) += ye[e];
            dual(edges[e].second, edges[e].first) += ye[e];
        }
        best_upper = std::min(best_upper, lambda_max(dual));
        // Lower: X - E + ||E|| I is psd with zero edge entries; ||E||_F bounds ||E||_2.
        double edge_sum = 0, edge_frob = 0;
        for (auto [i, j] : edges) {
            edge_sum += 2 * X(i, j);
            edge_frob += 2 * X(i, j) * X(i, j);
        }
        const double t = std::sqrt(edge_frob);
        const double trace = X.trace() + static_cast<double>(n) * t;
        if (trace > 0) {
            const double value = (X.sum() - edge_sum + static_cast<double>(n) * t) / trace;
            best_lower = std::max(best_lower, value);
        }
    };

    Matrix V(N, N), Xnext(N, N);
    int it = 0;
    for (; it < options.max_iterations; ++it) {
        // y = -(A A^*)^{-1} (mu (A(X) - b) + A(S - C))
        const Matrix SC = S - C;
        y0 = -(mu * (X.trace() - 1.0) + SC.trace()) / static_cast<double>(n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [i, j] = edges[e];
            ye[e] = -(mu * 2 * X(i, j) + 2 * SC(i, j)) / 2.0;
        }
        // V = C - A^*(y) - mu X
        V = C - mu * X;
        V.diagonal().array() -= y0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [i, j] = edges[e];
            V(i, j) -= ye[e];
            V(j, i) -= ye[e];
        }
        psd_split(V, S, Xnext);
        X = Xnext / mu;

        if (it % 10 == 9) {
            // Rebalance mu from the relative primal and dual residuals.
            double pinf = (X.trace() - 1.0) * (X.trace() - 1.0);
            for (auto [i, j] : edges) pinf += 4 * X(i, j) * X(i, j);
            pinf = std::sqrt(pinf);
            Matrix dres = S - C;
            dres.diagonal().array() += y0;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                dres(edges[e].first, edges[e].second) += ye[e];
                dres(edges[e].second, edges[e].first) += ye[e];
            }
            const double dinf = dres.norm() / (1.0 + static_cast<double>(n));
            if (pinf > 2 * dinf) mu = std::min(mu * 1.4, 1e4);
            else if (dinf > 2 * pinf) mu = std::max(mu * 0.7, 1e-4);
        }
        if (it % 20 == 19) {
            certify();
            if (best_upper - best_lower < options.tolerance) break;
            if (deadline.expired()) break;
        }
    }
    certify();
    r.iterations = std::min(it + 1, options.max_iterations);
    r.lower = best_lower;
    r.upper = best_upper;
    r.value = 0.5 * (best_lower + best_upper);
    r.status = r.gap() < options.tolerance ? SolveStatus::tolerance : SolveStatus::bound;
    return r;
}

}  // namespace qctx
