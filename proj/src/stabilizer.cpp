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

#include "qctx/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "qctx/error.hpp"

namespace qctx {

std::uint32_t vector_index(const SymplecticPauli &p, PrimeDim d) {
    std::uint32_t index = 0;
    for (int v : p.x) index = index * d.value() + static_cast<std::uint32_t>(d.reduce(v));
    for (int v : p.z) index = index * d.value() + static_cast<std::uint32_t>(d.reduce(v));
    return index;
}

SymplecticPauli pauli_from_index(std::uint32_t index, int num_qudits, PrimeDim d) {
    std::vector<int> digits(2 * num_qudits);
    for (int i = 2 * num_qudits - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(index % d.value());
        index /= d.value();
    }
    return SymplecticPauli(std::vector<int>(digits.begin(), digits.begin() + num_qudits),
                           std::vector<int>(digits.begin() + num_qudits, digits.end()));
}

int eigenvalue_phase(int k, PrimeDim d) {
    // lambda = omega^k; stabilizer element lambda^{-1} P. For d = 2, omega = -1 = i^2.
    return d.is_odd() ? d.reduce(-k) : (2 * d.reduce(k)) % 4;
}

namespace {

// Reduced row echelon form over Z_d, zero rows dropped.
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, PrimeDim d) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const int inv = mod_inverse(rows[rank][c], d);
        for (auto &v : rows[rank]) v = d.reduce(std::int64_t{v} * inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const int factor = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) {
                rows[r][k] = d.reduce(rows[r][k] - std::int64_t{factor} * rows[rank][k]);
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

std::vector<int> concat(const SymplecticPauli &p) {
    std::vector<int> v = p.x;
    v.insert(v.end(), p.z.begin(), p.z.end());
    return v;
}

SymplecticPauli identity_pauli(int n, PrimeDim d) {
    return normalized(SymplecticPauli(std::vector<int>(n, 0), std::vector<int>(n, 0)), d);
}

std::string state_key(const StabilizerState &s) {
    std::string key;
    for (const auto &g : s.generators()) {
        for (int v : g.x) key.push_back(static_cast<char>(v));
        for (int v : g.z) key.push_back(static_cast<char>(v));
        key.push_back(static_cast<char>(g.phase));
    }
    return key;
}

}  // namespace

StabilizerState StabilizerState::from_generators(PrimeDim d, std::span<const SymplecticPauli> generators,
                                                 std::string label) {
    const int n = static_cast<int>(generators.size());
    if (n == 0) throw Error(ErrorCode::ShapeMismatch, "a stabilizer state needs generators");
    std::vector<SymplecticPauli> gens;
    for (const auto &g : generators) {
        if (static_cast<int>(g.num_qudits()) != n) {
            throw Error(ErrorCode::ShapeMismatch, "need exactly n generators on n qudits");
        }
        gens.push_back(normalized(g, d));
    }
    for (int i = 0; i < n; ++i) {
        const SymplecticPauli order_check = power(gens[i], d.is_odd() ? d.value() : 2, d);
        if (!order_check.is_identity() || order_check.phase != 0) {
            throw Error(ErrorCode::ShapeMismatch, "generator " + gens[i].label() + " has no +1 eigenspace");
        }
        for (int j = i + 1; j < n; ++j) {
            if (!symplectic_commutes(gens[i], gens[j], d)) {
                throw Error(ErrorCode::ShapeMismatch, "stabilizer generators must commute");
            }
        }
    }

    StabilizerState s(d);
    s.n_ = n;
    s.label_ = std::move(label);

    // Every group element is prod_i g_i^{c_i}, c in Z_d^n.
    std::vector<std::vector<SymplecticPauli>> powers(n);
    for (int i = 0; i < n; ++i) {
        powers[i].push_back(identity_pauli(n, d));
        for (int k = 1; k < d.value(); ++k) powers[i].push_back(multiply(powers[i].back(), gens[i], d));
    }
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= d.value();
    s.elements_.reserve(total);
    std::vector<int> c(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            c[i] = static_cast<int>(rest % d.value());
            rest /= d.value();
        }
        SymplecticPauli e = identity_pauli(n, d);
        for (int i = 0; i < n; ++i) e = multiply(e, powers[i][c[i]], d);
        s.elements_.push_back({vector_index(e, d), static_cast<std::uint8_t>(e.phase)});
    }
    std::sort(s.elements_.begin(), s.elements_.end());
    for (std::size_t i = 1; i < s.elements_.size(); ++i) {
        if (s.elements_[i].vector == s.elements_[i - 1].vector) {
            throw Error(ErrorCode::ShapeMismatch, "stabilizer generators are not independent");
        }
    }

    std::vector<std::vector<int>> rows;
    for (const auto &g : gens) rows.push_back(concat(g));
    for (const auto &row : rref(std::move(rows), d)) {
        SymplecticPauli g(std::vector<int>(row.begin(), row.begin() + n), std::vector<int>(row.begin() + n, row.end()));
        g.phase = s.phase_of(vector_index(g, d));
        s.generators_.push_back(std::move(g));
    }
    return s;
}

int StabilizerState::phase_of(std::uint32_t vector) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), vector,
                               [](const Element &e, std::uint32_t v) { return e.vector < v; });
    if (it == elements_.end() || it->vector != vector) return -1;
    return it->phase;
}

std::vector<std::vector<int>> StabilizerState::lagrangian_rows() const {
    std::vector<std::vector<int>> rows;
    for (const auto &g : generators_) rows.push_back(concat(g));
    return rows;
}

DenseMatrix StabilizerState::projector() const {
    DenseMatrix acc;
    for (const auto &e : elements_) {
        SymplecticPauli p = pauli_from_index(e.vector, n_, d_);
        p.phase = e.phase;
        DenseMatrix m = pauli_matrix(p, d_);
        if (acc.dim() == 0) acc = DenseMatrix(m.dim());
        acc += m;
    }
    acc *= Complex(1.0 / static_cast<double>(elements_.size()));
    return acc;
}

bool is_orthogonal(const StabilizerState &s, const StabilizerState &t) {
    if (s.dim() != t.dim() || s.num_qudits() != t.num_qudits()) {
        throw Error(ErrorCode::ShapeMismatch, "orthogonality of states of different shape");
    }
    // Both element lists are sorted by vector: merge.
    const auto &a = s.elements();
    const auto &b = t.elements();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].vector < b[j].vector) {
            ++i;
        } else if (b[j].vector < a[i].vector) {
            ++j;
        } else {
            if (a[i].phase != b[j].phase) return true;
            ++i;
            ++j;
        }
    }
    return false;
}

StabilizerState single_qudit_eigenstate(const SymplecticPauli &p, int k, PrimeDim d) {
    SymplecticPauli g = normalized(p, d);
    if (g.num_qudits() != 1) throw Error(ErrorCode::ShapeMismatch, "single-qudit label expected");
    if (g.is_identity()) throw Error(ErrorCode::IdentityPauli, "identity has no eigenbasis");
    g.phase = eigenvalue_phase(k, d);
    SymplecticPauli unphased = g;
    unphased.phase = 0;
    return StabilizerState::from_generators(d, std::span(&g, 1), projector_label(unphased, d.reduce(k)));
}

StabilizerState product_state(const StabilizerState &a, const StabilizerState &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "product of states of different d");
    const PrimeDim d = a.dim();
    std::vector<SymplecticPauli> gens;
    for (const auto &g : a.generators()) gens.push_back(tensor(g, identity_pauli(b.num_qudits(), d), d));
    for (const auto &g : b.generators()) gens.push_back(tensor(identity_pauli(a.num_qudits(), d), g, d));
    return StabilizerState::from_generators(d, gens, a.label() + "x" + b.label());
}

StabilizerState jamiolkowski_stabilizer(const CliffordElement &c, PrimeDim d) {
    const DenseMatrix u = clifford_unitary(c, d);
    const SymplecticPauli x = single_pauli(1, 0, d);
    const SymplecticPauli z = single_pauli(0, 1, d);
    const SymplecticPauli z_inv = single_pauli(0, -1, d);
    // |Phi> is stabilized by X (x) X and Z (x) Z^{-1}; conjugate the second factor by U.
    const std::vector<SymplecticPauli> gens{tensor(x, conjugate_pauli(u, x, d), d),
                                            tensor(z, conjugate_pauli(u, z_inv, d), d)};
    return StabilizerState::from_generators(d, gens, c.label());
}

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::single: return "single";
        case FamilyKind::separable: return "sep";
        case FamilyKind::entangled: return "ent";
        case FamilyKind::total: return "tot";
    }
    return "?";
}

FamilyKind parse_family(std::string_view name) {
    if (name == "single") return FamilyKind::single;
    if (name == "sep" || name == "separable") return FamilyKind::separable;
    if (name == "ent" || name == "entangled") return FamilyKind::entangled;
    if (name == "tot" || name == "total") return FamilyKind::total;
    throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
}

std::vector<SymplecticPauli> mub_operators(PrimeDim d) {
    std::vector<SymplecticPauli> ops{single_pauli(0, 1, d)};
    for (int z = 0; z < d.value(); ++z) ops.push_back(single_pauli(1, z, d));
    return ops;
}

StateFamily enumerate_single(PrimeDim d) {
    StateFamily family{FamilyKind::single, d, {}};
    for (const auto &op : mub_operators(d)) {
        for (int k = 0; k < d.value(); ++k) family.states.push_back(single_qudit_eigenstate(op, k, d));
    }
    return family;
}

std::size_t expected_family_size(PrimeDim d, FamilyKind kind) {
    const std::size_t n = static_cast<std::size_t>(d.value());
    switch (kind) {
        case FamilyKind::single: return n * (n + 1);
        case FamilyKind::separable: return n * (n + 1) * n * (n + 1);
        case FamilyKind::entangled: return n * n * n * (n * n - 1);
        case FamilyKind::total: return n * n * (n * n + 1) * (n + 1);
    }
    return 0;
}

StateFamily enumerate_two_qudit(PrimeDim d, FamilyKind kind, EnumerationLimits limits) {
    if (kind == FamilyKind::single) return enumerate_single(d);
    if (d.value() > limits.max_dim) {
        throw Error(ErrorCode::BudgetExceeded,
                    "two-qudit enumeration capped at d = " + std::to_string(limits.max_dim));
    }
    StateFamily family{kind, d, {}};
    if (kind == FamilyKind::separable || kind == FamilyKind::total) {
        const StateFamily single = enumerate_single(d);
        for (const auto &a : single.states)
            for (const auto &b : single.states) family.states.push_back(product_state(a, b));
    }
    if (kind == FamilyKind::entangled || kind == FamilyKind::total) {
        std::unordered_set<std::string> seen;
        for (const auto &s : family.states) seen.insert(state_key(s));
        for (const auto &c : enumerate_clifford(d)) {
            StabilizerState s = jamiolkowski_stabilizer(c, d);
            if (seen.insert(state_key(s)).second) family.states.push_back(std::move(s));
        }
    }
    return family;
}

std::vector<std::vector<int>> basis_partition(const StateFamily &family) {
    std::map<std::vector<std::vector<int>>, std::size_t> index;
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < family.states.size(); ++i) {
        auto [it, inserted] = index.emplace(family.states[i].lagrangian_rows(), groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(static_cast<int>(i));
    }
    return groups;
}

std::vector<int> weyl_origin_states(const StateFamily &family) {
    const PrimeDim d = family.d;
    if (!d.is_odd()) throw Error(ErrorCode::EvenDim, "the symmetric Weyl phase needs odd d");
    const int h = half(d);
    std::vector<int> out;
    for (std::size_t i = 0; i < family.states.size(); ++i) {
        const auto &s = family.states[i];
        bool origin = true;
        for (const auto &e : s.elements()) {
            const SymplecticPauli p = pauli_from_index(e.vector, s.num_qudits(), d);
            std::int64_t xz = 0;
            for (std::size_t q = 0; q < p.x.size(); ++q) xz += p.x[q] * p.z[q];
            if (e.phase != d.reduce(h * xz)) {
                origin = false;
                break;
            }
        }
        if (origin) out.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace qctx
