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

#include "qctx/pauli.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qctx/error.hpp"

namespace qctx {

int phase_order(PrimeDim d) noexcept { return d.is_odd() ? d.value() : 4; }

Complex phase_value(PrimeDim d, int exponent) {
    const int order = phase_order(d);
    const int e = ((exponent % order) + order) % order;
    if (order == 4) {
        static constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return kPowersOfI[e];
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * e / order);
}

Complex root_of_unity(PrimeDim d, int k) {
    const int e = d.reduce(k);
    if (d.value() == 2) return e == 0 ? Complex{1, 0} : Complex{-1, 0};
    return std::polar(1.0, 2.0 * std::numbers::pi * e / d.value());
}

bool SymplecticPauli::is_identity() const noexcept {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0 || z[i] != 0) return false;
    }
    return true;
}

std::string SymplecticPauli::label() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i];
    out << '|';
    for (std::size_t i = 0; i < z.size(); ++i) out << (i ? "," : "") << z[i];
    out << ')';
    return out.str();
}

SymplecticPauli normalized(SymplecticPauli p, PrimeDim d) {
    if (p.x.size() != p.z.size() || p.x.empty()) {
        throw Error(ErrorCode::ShapeMismatch, "Pauli x and z vectors must have equal nonzero length");
    }
    for (auto &v : p.x) v = d.reduce(v);
    for (auto &v : p.z) v = d.reduce(v);
    const int order = phase_order(d);
    p.phase = ((p.phase % order) + order) % order;
    return p;
}

SymplecticPauli single_pauli(int x, int z, PrimeDim d, int phase) {
    return normalized(SymplecticPauli({x}, {z}, phase), d);
}

SymplecticPauli tensor(const SymplecticPauli &a, const SymplecticPauli &b, PrimeDim d) {
    SymplecticPauli out = a;
    out.x.insert(out.x.end(), b.x.begin(), b.x.end());
    out.z.insert(out.z.end(), b.z.begin(), b.z.end());
    out.phase = a.phase + b.phase;
    return normalized(std::move(out), d);
}

namespace {

void require_same_shape(const SymplecticPauli &a, const SymplecticPauli &b) {
    if (a.num_qudits() != b.num_qudits() || a.x.size() != a.z.size() || b.x.size() != b.z.size()) {
        throw Error(ErrorCode::ShapeMismatch, "Pauli operators act on different numbers of qudits");
    }
}

int dot(const std::vector<int> &a, const std::vector<int> &b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

SymplecticPauli multiply(const SymplecticPauli &a, const SymplecticPauli &b, PrimeDim d) {
    require_same_shape(a, b);
    const int n = static_cast<int>(a.num_qudits());
    SymplecticPauli c;
    c.x.resize(n);
    c.z.resize(n);
    for (int i = 0; i < n; ++i) {
        c.x[i] = d.reduce(a.x[i] + b.x[i]);
        c.z[i] = d.reduce(a.z[i] + b.z[i]);
    }
    // Z^z X^x' = omega^{z x'} X^x' Z^z.
    if (d.is_odd()) {
        c.phase = a.phase + b.phase + dot(a.z, b.x);
    } else {
        // i^{ax.az} i^{bx.bz} (-1)^{az.bx} X^{cx} Z^{cz} = i^{... - cx.cz} P_c
        c.phase = a.phase + b.phase + dot(a.x, a.z) + dot(b.x, b.z) + 2 * dot(a.z, b.x) - dot(c.x, c.z);
    }
    return normalized(std::move(c), d);
}

SymplecticPauli power(const SymplecticPauli &a, int k, PrimeDim d) {
    const int order = phase_order(d) * d.value();
    k = ((k % order) + order) % order;
    SymplecticPauli result = normalized(
        SymplecticPauli(std::vector<int>(a.num_qudits(), 0), std::vector<int>(a.num_qudits(), 0)), d);
    for (int i = 0; i < k; ++i) result = multiply(result, a, d);
    return result;
}

SymplecticPauli inverse(const SymplecticPauli &a, PrimeDim d) {
    // The group has exponent phase_order * d, so a^{-1} = a^{order-1}.
    return power(a, phase_order(d) * d.value() - 1, d);
}

int symplectic_form(const SymplecticPauli &p, const SymplecticPauli &q, PrimeDim d) {
    require_same_shape(p, q);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < p.num_qudits(); ++i) s += p.x[i] * q.z[i] - q.x[i] * p.z[i];
    return d.reduce(s);
}

bool symplectic_commutes(const SymplecticPauli &p, const SymplecticPauli &q, PrimeDim d) {
    return symplectic_form(p, q, d) == 0;
}

DenseMatrix pauli_matrix(const SymplecticPauli &p, PrimeDim d, std::size_t max_dim) {
    const SymplecticPauli q = normalized(p, d);
    const int n = static_cast<int>(q.num_qudits());
    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= static_cast<std::size_t>(d.value());
        if (dim > max_dim) {
            throw Error(ErrorCode::DimensionOverflow, "Pauli matrix of dimension > " + std::to_string(max_dim));
        }
    }
    // Monomial matrix: X^x Z^z |j> = omega^{z.j} |j + x>, with qudit 0 most significant.
    DenseMatrix m(dim);
    const Complex global = phase_value(d, q.phase) * (d.is_odd() ? Complex{1} : phase_value(d, dot(q.x, q.z)));
    std::vector<int> digits(n);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col;
        for (int i = n - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(rest % d.value());
            rest /= d.value();
        }
        int zphase = 0;
        std::size_t row = 0;
        for (int i = 0; i < n; ++i) {
            zphase += q.z[i] * digits[i];
            row = row * d.value() + static_cast<std::size_t>(d.reduce(digits[i] + q.x[i]));
        }
        m(row, col) = global * root_of_unity(d, zphase);
    }
    return m;
}

std::string projector_label(const SymplecticPauli &p, int k) {
    return p.label() + "[" + std::to_string(k) + "]";
}

Projector eigenprojector(const SymplecticPauli &p, int k, PrimeDim d) {
    SymplecticPauli label = normalized(p, d);
    if (label.is_identity()) throw Error(ErrorCode::IdentityPauli, "identity has no nontrivial eigenprojector");
    label.phase = 0;
    k = d.reduce(k);
    const DenseMatrix pm = pauli_matrix(label, d);
    DenseMatrix acc(pm.dim());
    DenseMatrix pj = DenseMatrix::identity(pm.dim());
    for (int j = 0; j < d.value(); ++j) {
        acc += root_of_unity(d, -j * k) * pj;
        pj = pj * pm;
    }
    acc *= Complex(1.0 / d.value());
    return Projector{std::move(acc), static_cast<int>(pm.dim()) / d.value(), projector_label(label, k)};
}

std::vector<Projector> rank1_decompose(const SymplecticPauli &p, int k, PrimeDim d) {
    const SymplecticPauli q = normalized(p, d);
    if (q.num_qudits() != 2) throw Error(ErrorCode::ShapeMismatch, "rank1_decompose needs a two-qudit label");
    const SymplecticPauli first = single_pauli(q.x[0], q.z[0], d);
    const SymplecticPauli second = single_pauli(q.x[1], q.z[1], d);
    if (first.is_identity() || second.is_identity()) {
        throw Error(ErrorCode::IdentityFactor, "both tensor factors of " + q.label() + " must be non-identity");
    }
    std::vector<Projector> out;
    out.reserve(d.value());
    for (int a = 0; a < d.value(); ++a) {
        const int b = d.reduce(k - a);
        Projector pa = eigenprojector(first, a, d);
        Projector pb = eigenprojector(second, b, d);
        out.push_back(Projector{kron(pa.matrix, pb.matrix), 1, pa.label + "x" + pb.label});
    }
    return out;
}

}  // namespace qctx
