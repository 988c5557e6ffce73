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

#include <gmpxx.h>

#include <algorithm>

#include "qctx/error.hpp"
#include "qctx/invariants.hpp"

namespace qctx {

namespace {

Rational to_rational(const mpq_class &q) { return {q.get_str(), q.get_d()}; }

// Dense exact tableau for  max c.z  s.t.  T z = rhs, z >= 0, started from a
// dual-feasible slack basis and driven to primal feasibility by dual simplex.
class DualSimplex {
public:
    DualSimplex(std::vector<std::vector<mpq_class>> rows, std::vector<mpq_class> rhs, std::vector<mpq_class> reduced,
                std::vector<int> basis)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), reduced_(std::move(reduced)), basis_(std::move(basis)) {}

    void solve(const Deadline &deadline) {
        int degenerate_streak = 0;
        bool bland = false;
        while (true) {
            if (deadline.expired()) throw Error(ErrorCode::BudgetExceeded, "fractional packing LP ran out of time");
            // Leaving row: most negative rhs, or lowest basic index under Bland's rule.
            int r = -1;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (sgn(rhs_[i]) >= 0) continue;
                if (r < 0 || (bland ? basis_[i] < basis_[r] : rhs_[i] < rhs_[r])) r = static_cast<int>(i);
            }
            if (r < 0) return;
            const auto &row = rows_[r];
            int e = -1;
            mpq_class best_ratio;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (sgn(row[j]) >= 0) continue;
                mpq_class ratio = reduced_[j] / row[j];  // >= 0 since reduced <= 0
                if (e < 0 || ratio < best_ratio) {
                    e = static_cast<int>(j);
                    best_ratio = ratio;
                }
            }
            if (e < 0) throw Error(ErrorCode::NoConvergence, "fractional packing LP is infeasible");
            if (sgn(best_ratio) == 0) {
                if (++degenerate_streak > 50) bland = true;
            } else {
                degenerate_streak = 0;
            }
            pivot(r, e);
        }
    }

    const std::vector<int> &basis() const { return basis_; }
    const std::vector<mpq_class> &rhs() const { return rhs_; }
    const std::vector<mpq_class> &reduced() const { return reduced_; }

private:
    void pivot(int r, int e) {
        auto &prow = rows_[r];
        const mpq_class inv = 1 / prow[e];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < prow.size(); ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (static_cast<int>(i) == r || sgn(rows_[i][e]) == 0) continue;
            const mpq_class f = rows_[i][e];
            for (std::size_t j : nz) rows_[i][j] -= f * prow[j];
            rhs_[i] -= f * rhs_[r];
        }
        if (sgn(reduced_[e]) != 0) {
            const mpq_class f = reduced_[e];
            for (std::size_t j : nz) reduced_[j] -= f * prow[j];
        }
        basis_[r] = e;
    }

    std::vector<std::vector<mpq_class>> rows_;
    std::vector<mpq_class> rhs_;
    std::vector<mpq_class> reduced_;
    std::vector<int> basis_;
};

}  // namespace

PackingResult fractional_packing(const Graph &g, std::size_t max_vertices, double budget_seconds) {
    const std::size_t n = g.size();
    if (n > max_vertices) {
        throw Error(ErrorCode::BudgetExceeded, "fractional packing is capped at " + std::to_string(max_vertices) + " vertices");
    }
    PackingResult result;
    if (n == 0) {
        result.value = {"0", 0.0};
        return result;
    }
    const Deadline deadline = Deadline::after_seconds(budget_seconds);
    const auto cliques = maximal_cliques(g, 200000, deadline);
    const std::size_t m = cliques.size();
    result.num_maximal_cliques = m;

    // Fractional clique cover (the LP dual): max -sum y  s.t.  -M y + s = -1.
    std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(m + n, 0));
    for (std::size_t q = 0; q < m; ++q)
        for (int v : cliques[q]) rows[v][q] = -1;
    for (std::size_t v = 0; v < n; ++v) rows[v][m + v] = 1;
    std::vector<mpq_class> rhs(n, -1);
    std::vector<mpq_class> reduced(m + n, 0);
    for (std::size_t q = 0; q < m; ++q) reduced[q] = -1;
    std::vector<int> basis(n);
    for (std::size_t v = 0; v < n; ++v) basis[v] = static_cast<int>(m + v);

    DualSimplex lp(std::move(rows), std::move(rhs), std::move(reduced), std::move(basis));
    lp.solve(deadline);

    std::vector<mpq_class> y(m, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (lp.basis()[i] < static_cast<int>(m)) y[lp.basis()[i]] = lp.rhs()[i];
    std::vector<mpq_class> x(n);
    for (std::size_t v = 0; v < n; ++v) x[v] = -lp.reduced()[m + v];

    // Certificate: x is a packing, y a fractional cover, and their values agree.
    mpq_class sum_x = 0, sum_y = 0;
    for (const auto &v : x) {
        if (sgn(v) < 0) throw Error(ErrorCode::NoConvergence, "packing certificate has a negative weight");
        sum_x += v;
    }
    for (const auto &q : cliques) {
        mpq_class load = 0;
        for (int v : q) load += x[v];
        if (load > 1) throw Error(ErrorCode::NoConvergence, "packing certificate violates a clique");
    }
    std::vector<mpq_class> coverage(n, 0);
    for (std::size_t q = 0; q < m; ++q) {
        if (sgn(y[q]) < 0) throw Error(ErrorCode::NoConvergence, "cover certificate has a negative weight");
        sum_y += y[q];
        for (int v : cliques[q]) coverage[v] += y[q];
    }
    for (const auto &c : coverage)
        if (c < 1) throw Error(ErrorCode::NoConvergence, "cover certificate leaves a vertex uncovered");
    if (sum_x != sum_y) throw Error(ErrorCode::NoConvergence, "packing and cover certificates disagree");

    result.value = to_rational(sum_x);
    for (const auto &v : x) result.weights.push_back(to_rational(v));
    result.status = SolveStatus::exact;
    return result;
}

}  // namespace qctx
