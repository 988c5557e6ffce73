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

#include "qctx/bell.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qctx/error.hpp"
#include "qctx/stabilizer.hpp"

namespace qctx {

int chsh_classical_bound(PrimeDim d) {
    switch (d.value()) {
        case 2: return 2;
        case 3: return 9;
        case 5: return 35;
        case 7: return 84;
        default: throw Error(ErrorCode::UnsupportedDim, "no known CHSH bound for d = " + std::to_string(d.value()));
    }
}

namespace {

// Alice's A_j and Bob's B_k as phased single-qudit Paulis.
SymplecticPauli alice(int j, PrimeDim d) {
    if (!d.is_odd()) return single_pauli(1, j, d);
    return single_pauli(1, j, d, d.reduce(std::int64_t{j} * (j + 1)));
}

SymplecticPauli bob(int k, PrimeDim d) {
    if (!d.is_odd()) return single_pauli(1, k, d);
    const int h = half(d);
    return single_pauli(1, d.reduce(std::int64_t{h} * k), d, d.reduce(std::int64_t{h} * h * (k * k + 2 * k)));
}

std::string measurement_label(const std::string &name, const SymplecticPauli &p) {
    SymplecticPauli unphased = p;
    unphased.phase = 0;
    std::string out = name + " = ";
    if (p.phase != 0) out += "w^" + std::to_string(p.phase) + " ";
    return out + unphased.label();
}

void check_dim(PrimeDim d) {
    if (d.value() > kMaxChshDim) {
        throw Error(ErrorCode::UnsupportedDim, "CHSH operators are supported up to d = " + std::to_string(kMaxChshDim));
    }
}

}  // namespace

BellOperator chsh_operator(PrimeDim d) {
    check_dim(d);
    const int n = d.value();
    BellOperator op{d, DenseMatrix(static_cast<std::size_t>(n * n)), chsh_classical_bound(d), {}};
    std::vector<DenseMatrix> a, b;
    for (int j = 0; j < n; ++j) {
        a.push_back(pauli_matrix(alice(j, d), d));
        b.push_back(pauli_matrix(bob(j, d), d));
        op.measurement_labels.push_back(measurement_label("A_" + std::to_string(j), alice(j, d)));
    }
    for (int k = 0; k < n; ++k) op.measurement_labels.push_back(measurement_label("B_" + std::to_string(k), bob(k, d)));
    for (int p = 1; p < n; ++p) {
        for (int j = 0; j < n; ++j) {
            const DenseMatrix ap = matrix_power(a[j], p);
            for (int k = 0; k < n; ++k) {
                op.matrix += root_of_unity(d, p * j * k) * kron(ap, matrix_power(b[k], p));
            }
        }
    }
    return op;
}

std::vector<ChshTerm> chsh_terms(PrimeDim d) {
    check_dim(d);
    std::vector<ChshTerm> out;
    for (int j = 0; j < d.value(); ++j) {
        for (int k = 0; k < d.value(); ++k) {
            // w^{jk} A_j (x) B_k = w^t P for an unphased P; its w^0 eigenspace is P's w^{-t} one.
            const SymplecticPauli t = tensor(alice(j, d), bob(k, d), d);
            ChshTerm term{j, k, t, 0};
            term.label.phase = 0;
            if (d.is_odd()) {
                term.eigen_index = d.reduce(-(t.phase + std::int64_t{j} * k));
            } else {
                const int phase = (t.phase + 2 * j * k) % 4;  // units of i, always even here
                term.eigen_index = phase / 2;
            }
            out.push_back(term);
        }
    }
    return out;
}

ContextualityScenario chsh_scenario(PrimeDim d) {
    const BellOperator op = chsh_operator(d);
    const int n = d.value();
    ContextualityScenario s;
    s.name = "chsh-d" + std::to_string(n);
    s.hilbert_dim = n * n;
    s.terms = chsh_terms(d);

    DenseMatrix rank_d_sum(static_cast<std::size_t>(n * n));
    for (const auto &term : s.terms) rank_d_sum += eigenprojector(term.label, term.eigen_index, d).matrix;
    const DenseMatrix rebuilt = Complex(n) * rank_d_sum - Complex(n * n) * DenseMatrix::identity(n * n);
    if (max_abs_diff(rebuilt, op.matrix) > 1e-9) {
        throw Error(ErrorCode::DecompositionMismatch, "B != d * sum Pi - d^2 I");
    }

    for (const auto &term : s.terms) {
        for (auto &p : rank1_decompose(term.label, term.eigen_index, d)) s.projectors.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < s.projectors.size(); ++i)
        for (std::size_t j = i + 1; j < s.projectors.size(); ++j)
            if (max_abs_diff(s.projectors[i].matrix, s.projectors[j].matrix) < 1e-9) {
                throw Error(ErrorCode::DecompositionMismatch, "rank-1 projectors are not distinct");
            }

    s.graph = orthogonality_graph(s.projectors);
    s.sigma = DenseMatrix(static_cast<std::size_t>(n * n));
    for (const auto &p : s.projectors) s.sigma += p.matrix;
    if (max_abs_diff(s.sigma, rank_d_sum) > 1e-9) {
        throw Error(ErrorCode::DecompositionMismatch, "rank-1 projectors do not sum to the rank-d terms");
    }
    const EigenSystem es = hermitian_eigen(s.sigma);
    s.qm_value = es.values.back();
    for (std::size_t r = 0; r < es.vectors.dim(); ++r) s.qm_state.push_back(es.vectors(r, es.vectors.dim() - 1));
    return s;
}

bool regularity_conjecture_check(const ContextualityScenario &s, PrimeDim d) {
    const auto deg = s.graph.regular_degree();
    return deg && *deg == static_cast<std::size_t>((2 * d.value() - 1) * (d.value() - 1));
}

namespace {

ContextualityScenario finish_scenario(std::string name, int dim, std::vector<Projector> projectors) {
    ContextualityScenario s;
    s.name = std::move(name);
    s.hilbert_dim = dim;
    s.projectors = std::move(projectors);
    s.graph = orthogonality_graph(s.projectors);
    s.sigma = DenseMatrix(static_cast<std::size_t>(dim));
    for (const auto &p : s.projectors) s.sigma += p.matrix;
    const EigenSystem es = hermitian_eigen(s.sigma);
    s.qm_value = es.values.back();
    for (std::size_t r = 0; r < es.vectors.dim(); ++r) s.qm_state.push_back(es.vectors(r, es.vectors.dim() - 1));
    return s;
}

SymplecticPauli two_qubit(char a, char b) {
    const PrimeDim d(2);
    auto one = [&](char c) {
        switch (c) {
            case 'X': return single_pauli(1, 0, d);
            case 'Y': return single_pauli(1, 1, d);
            case 'Z': return single_pauli(0, 1, d);
            default: return single_pauli(0, 0, d);
        }
    };
    return tensor(one(a), one(b), d);
}

}  // namespace

PeresMerminRecord peres_mermin() {
    const PrimeDim d(2);
    PeresMerminRecord rec;
    rec.cells = {{"XY", "YX", "ZZ"}, {"YZ", "ZY", "XX"}, {"ZX", "XZ", "YY"}};
    std::array<std::array<SymplecticPauli, 3>, 3> ops;
    std::array<std::array<DenseMatrix, 3>, 3> mats;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            ops[r][c] = two_qubit(rec.cells[r][c][0], rec.cells[r][c][1]);
            mats[r][c] = pauli_matrix(ops[r][c], d);
        }

    // Contexts: rows (product +I), then columns (product -I).
    struct Context {
        std::array<std::pair<int, int>, 3> cells;
        int sign;
        std::string name;
    };
    std::vector<Context> contexts;
    for (int r = 0; r < 3; ++r) contexts.push_back({{{{r, 0}, {r, 1}, {r, 2}}}, +1, "R" + std::to_string(r + 1)});
    for (int c = 0; c < 3; ++c) contexts.push_back({{{{0, c}, {1, c}, {2, c}}}, -1, "C" + std::to_string(c + 1)});

    rec.contexts_commute = true;
    const DenseMatrix id = DenseMatrix::identity(4);
    for (const auto &ctx : contexts) {
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                const auto [ra, ca] = ctx.cells[a];
                const auto [rb, cb] = ctx.cells[b];
                rec.contexts_commute = rec.contexts_commute && symplectic_commutes(ops[ra][ca], ops[rb][cb], d);
            }
        DenseMatrix prod = id;
        for (auto [r, c] : ctx.cells) prod = prod * mats[r][c];
        const double dev = max_abs_diff(prod, Complex(ctx.sign) * id);
        (ctx.sign > 0 ? rec.row_deviation : rec.column_deviation) =
            std::max(ctx.sign > 0 ? rec.row_deviation : rec.column_deviation, dev);
    }

    for (int bits = 0; bits < 512; ++bits) {
        auto value = [&](int r, int c) { return (bits >> (3 * r + c)) & 1 ? -1 : 1; };
        bool ok = true;
        for (const auto &ctx : contexts) {
            int prod = 1;
            for (auto [r, c] : ctx.cells) prod *= value(r, c);
            ok = ok && prod == ctx.sign;
        }
        rec.consistent_assignments += ok;
        ++rec.assignments_scanned;
    }

    // Joint eigenbasis of each context: (I + s1 A)(I + s2 B) / 4 fixes the third value.
    for (const auto &ctx : contexts) {
        const auto [r0, c0] = ctx.cells[0];
        const auto [r1, c1] = ctx.cells[1];
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                DenseMatrix p = (id + Complex(s1) * mats[r0][c0]) * (id + Complex(s2) * mats[r1][c1]);
                p *= Complex(0.25);
                const std::string label = ctx.name + "[" + (s1 > 0 ? "+" : "-") + (s2 > 0 ? "+" : "-") +
                                          (s1 * s2 * ctx.sign > 0 ? "+" : "-") + "]";
                rec.projectors.push_back(Projector{std::move(p), 1, label});
            }
        }
    }
    rec.graph = orthogonality_graph(rec.projectors);

    const StateFamily ent = enumerate_two_qudit(d, FamilyKind::entangled);
    std::vector<DenseMatrix> ent_proj;
    for (const auto &st : ent.states) ent_proj.push_back(st.projector());
    std::vector<int> map;
    for (const auto &p : rec.projectors) {
        int match = -1;
        for (std::size_t i = 0; i < ent_proj.size() && match < 0; ++i)
            if (max_abs_diff(p.matrix, ent_proj[i]) < 1e-10) match = static_cast<int>(i);
        if (match < 0) {
            map.clear();
            break;
        }
        map.push_back(match);
    }
    rec.bijection = map;
    if (!map.empty()) rec.isomorphic_to_entangled = is_isomorphism(rec.graph, orthogonality_graph(ent), map);
    return rec;
}

ContextualityScenario kcbs_scenario() {
    const double c = std::cos(std::numbers::pi / 5);
    const double cos_t = std::sqrt(c / (1 + c));
    const double sin_t = std::sqrt(1 - cos_t * cos_t);
    std::vector<Projector> projectors;
    for (int i = 0; i < 5; ++i) {
        const double phi = 4 * std::numbers::pi * i / 5;
        const std::vector<Complex> v{cos_t, sin_t * std::cos(phi), sin_t * std::sin(phi)};
        projectors.push_back(Projector{DenseMatrix::outer(v), 1, "v" + std::to_string(i)});
    }
    return finish_scenario("kcbs", 3, std::move(projectors));
}

ContextualityScenario alternate_chsh_scenario() {
    const PrimeDim d(2);
    const BellOperator op = chsh_operator(d);
    const StateFamily tot = enumerate_two_qudit(d, FamilyKind::total);
    const std::size_t n = tot.states.size();

    // Sum of projectors = (1/4) sum_v c_v P_v; the target has c_I = 6 and
    // c = +1, +1, +1, -1 on XX, XY, YX, YY.
    constexpr int kVectors = 16;
    std::vector<std::array<int, kVectors>> coeff(n);
    for (std::size_t i = 0; i < n; ++i) {
        coeff[i].fill(0);
        for (const auto &e : tot.states[i].elements()) coeff[i][e.vector] = e.phase == 0 ? 1 : -1;
    }
    std::array<int, kVectors> target{};
    target[0] = 6;
    target[vector_index(two_qubit('X', 'X'), d)] = 1;
    target[vector_index(two_qubit('X', 'Y'), d)] = 1;
    target[vector_index(two_qubit('Y', 'X'), d)] = 1;
    target[vector_index(two_qubit('Y', 'Y'), d)] = -1;

    const Graph shape = complement(pan_graph(5));
    std::array<int, kVectors> current{};
    std::vector<int> chosen;
    std::optional<ContextualityScenario> found;

    auto accept = [&]() {
        std::vector<Projector> projectors;
        for (int i : chosen) {
            projectors.push_back(Projector{tot.states[i].projector(), 1, tot.states[i].label()});
        }
        ContextualityScenario s = finish_scenario("alternate-chsh", 4, std::move(projectors));
        const DenseMatrix lhs = Complex(4) * s.sigma - Complex(6) * DenseMatrix::identity(4);
        if (max_abs_diff(lhs, op.matrix) >= 1e-9) return;
        if (!find_isomorphism(s.graph, shape)) return;
        found = std::move(s);
    };

    auto search = [&](auto &&self, std::size_t from) -> void {
        if (found) return;
        const int remaining = 6 - static_cast<int>(chosen.size());
        for (int v = 1; v < kVectors; ++v)
            if (std::abs(target[v] - current[v]) > remaining) return;
        if (remaining == 0) {
            accept();
            return;
        }
        for (std::size_t i = from; i < n && !found; ++i) {
            chosen.push_back(static_cast<int>(i));
            for (int v = 0; v < kVectors; ++v) current[v] += coeff[i][v];
            self(self, i + 1);
            for (int v = 0; v < kVectors; ++v) current[v] -= coeff[i][v];
            chosen.pop_back();
        }
    };
    search(search, 0);
    if (!found) throw Error(ErrorCode::SearchFailed, "no six stabilizer projectors reproduce the CHSH operator");
    return std::move(*found);
}

}  // namespace qctx
