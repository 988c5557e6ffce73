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

#include "qctx/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qctx/error.hpp"

namespace qctx {

SL2Zd SL2Zd::make(int alpha, int beta, int gamma, int delta, PrimeDim d) {
    SL2Zd f{d.reduce(alpha), d.reduce(beta), d.reduce(gamma), d.reduce(delta)};
    if (d.reduce(std::int64_t{f.alpha} * f.delta - std::int64_t{f.beta} * f.gamma) != 1) {
        throw Error(ErrorCode::NotClifford, "matrix is not in SL(2, Z_d)");
    }
    return f;
}

SL2Zd operator*(const SL2Zd &a, const SL2Zd &b) {
    return {a.alpha * b.alpha + a.beta * b.gamma, a.alpha * b.beta + a.beta * b.delta,
            a.gamma * b.alpha + a.delta * b.gamma, a.gamma * b.beta + a.delta * b.delta};
}

SL2Zd mul(const SL2Zd &a, const SL2Zd &b, PrimeDim d) {
    SL2Zd p = a * b;
    return {d.reduce(p.alpha), d.reduce(p.beta), d.reduce(p.gamma), d.reduce(p.delta)};
}

SL2Zd inverse(const SL2Zd &f, PrimeDim d) {
    return {f.delta, d.reduce(-f.beta), d.reduce(-f.gamma), f.alpha};
}

std::array<int, 2> apply(const SL2Zd &f, std::array<int, 2> v, PrimeDim d) {
    return {d.reduce(std::int64_t{f.alpha} * v[0] + std::int64_t{f.beta} * v[1]),
            d.reduce(std::int64_t{f.gamma} * v[0] + std::int64_t{f.delta} * v[1])};
}

std::string CliffordElement::label() const {
    std::ostringstream out;
    out << "C([" << F.alpha << ',' << F.beta << ';' << F.gamma << ',' << F.delta << "]|" << u[0] << ',' << u[1]
        << ')';
    return out.str();
}

std::size_t clifford_key(const CliffordElement &c, PrimeDim d) {
    const std::size_t n = static_cast<std::size_t>(d.value());
    std::size_t key = static_cast<std::size_t>(c.F.alpha);
    for (int v : {c.F.beta, c.F.gamma, c.F.delta, c.u[0], c.u[1]}) key = key * n + static_cast<std::size_t>(v);
    return key;
}

std::vector<SL2Zd> enumerate_sl2(PrimeDim d) {
    std::vector<SL2Zd> out;
    const int n = d.value();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e)
                    if (d.reduce(a * e - b * c) == 1) out.push_back({a, b, c, e});
    return out;
}

std::vector<CliffordElement> enumerate_clifford(PrimeDim d) {
    std::vector<CliffordElement> out;
    const auto sl2 = enumerate_sl2(d);
    out.reserve(sl2.size() * d.value() * d.value());
    for (const auto &f : sl2)
        for (int u1 = 0; u1 < d.value(); ++u1)
            for (int u2 = 0; u2 < d.value(); ++u2) out.push_back({f, {u1, u2}});
    return out;
}

namespace {

// tau^e with tau = omega^{1/2} (odd d) or -i (d = 2).
Complex tau_power(std::int64_t e, PrimeDim d) {
    if (d.is_odd()) return root_of_unity(d, static_cast<int>(d.reduce(e * half(d))));
    static constexpr Complex kPowersOfMinusI[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return kPowersOfMinusI[((e % 4) + 4) % 4];
}

// Closest exponent e with |value - phase_value(d, e)| < 1e-9.
int round_phase(Complex value, PrimeDim d) {
    const int order = phase_order(d);
    for (int e = 0; e < order; ++e) {
        if (std::abs(value - phase_value(d, e)) < 1e-9) return e;
    }
    throw Error(ErrorCode::NotClifford, "coefficient is not a root of unity of the Pauli group");
}

int digit_count(std::size_t dim, PrimeDim d) {
    int n = 0;
    while (dim > 1) {
        dim /= d.value();
        ++n;
    }
    return n;
}

std::vector<int> digits_of(std::size_t index, int n, PrimeDim d) {
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(index % d.value());
        index /= d.value();
    }
    return digits;
}

enum class TraceClass { Zero, One, SqrtD, D };

TraceClass trace_class(const CliffordElement &c, PrimeDim d) {
    if (!d.is_odd()) throw Error(ErrorCode::EvenDim, "closed-form Clifford traces hold for odd d only");
    const auto &f = c.F;
    const int tr = f.trace(d);
    const int u1 = c.u[0], u2 = c.u[1];
    if (f.beta == 0) {
        if (tr != 2) return TraceClass::One;  // |l(alpha)| = 1 since alpha != 0
        if (f.gamma != 0) return u1 == 0 ? TraceClass::SqrtD : TraceClass::Zero;
        return (u1 == 0 && u2 == 0) ? TraceClass::D : TraceClass::Zero;
    }
    if (tr != 2) return TraceClass::One;  // |l(Tr F - 2)| = 1
    const int target = d.reduce(std::int64_t{mod_inverse(f.beta, d)} * (1 - f.alpha) * u1);
    return u2 == target ? TraceClass::SqrtD : TraceClass::Zero;
}

}  // namespace

DenseMatrix symplectic_unitary(const SL2Zd &f, PrimeDim d) {
    const int n = d.value();
    DenseMatrix u(static_cast<std::size_t>(n));
    if (f.beta != 0) {
        const std::int64_t binv = mod_inverse(f.beta, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(n));
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::int64_t e = binv * (std::int64_t{f.alpha} * k * k - 2LL * j * k + std::int64_t{f.delta} * j * j);
                u(j, k) = norm * tau_power(e, d);
            }
        }
    } else {
        for (int k = 0; k < n; ++k) {
            u(d.reduce(std::int64_t{f.alpha} * k), k) = tau_power(std::int64_t{f.alpha} * f.gamma * k * k, d);
        }
    }
    return u;
}

DenseMatrix clifford_unitary(const CliffordElement &c, PrimeDim d) {
    return pauli_matrix(single_pauli(c.u[0], c.u[1], d), d) * symplectic_unitary(c.F, d);
}

SymplecticPauli conjugate_pauli(const DenseMatrix &unitary, const SymplecticPauli &p, PrimeDim d) {
    const DenseMatrix image = unitary * pauli_matrix(p, d) * unitary.adjoint();
    const std::size_t dim = image.dim();
    const int n = digit_count(dim, d);
    // A Pauli is monomial: the row of column 0's nonzero entry is the x part.
    std::size_t row0 = dim;
    for (std::size_t r = 0; r < dim; ++r) {
        if (std::abs(image(r, 0)) > 0.5) {
            row0 = r;
            break;
        }
    }
    if (row0 == dim) throw Error(ErrorCode::NotClifford, "conjugate is not monomial");
    const std::vector<int> x = digits_of(row0, n, d);
    std::size_t zcount = 1;
    for (int i = 0; i < n; ++i) zcount *= d.value();
    for (std::size_t zi = 0; zi < zcount; ++zi) {
        SymplecticPauli candidate(x, digits_of(zi, n, d));
        const DenseMatrix pm = pauli_matrix(candidate, d);
        const Complex overlap = trace_of_product(pm.adjoint(), image) / static_cast<double>(dim);
        if (std::abs(std::abs(overlap) - 1.0) < 1e-9) {
            candidate.phase = round_phase(overlap, d);
            if (max_abs_diff(pauli_matrix(candidate, d), image) > 1e-9) {
                throw Error(ErrorCode::NotClifford, "conjugate is not a Pauli group element");
            }
            return normalized(std::move(candidate), d);
        }
    }
    throw Error(ErrorCode::NotClifford, "conjugate is not proportional to a Pauli");
}

CliffordElement identify_clifford(const DenseMatrix &unitary, PrimeDim d) {
    if (unitary.dim() != static_cast<std::size_t>(d.value())) {
        throw Error(ErrorCode::ShapeMismatch, "single-qudit Clifford expected");
    }
    const SymplecticPauli xi = conjugate_pauli(unitary, single_pauli(1, 0, d), d);
    const SymplecticPauli zi = conjugate_pauli(unitary, single_pauli(0, 1, d), d);
    const SL2Zd f = SL2Zd::make(xi.x[0], zi.x[0], xi.z[0], zi.z[0], d);
    const DenseMatrix rest = unitary * symplectic_unitary(f, d).adjoint();
    for (int u1 = 0; u1 < d.value(); ++u1) {
        for (int u2 = 0; u2 < d.value(); ++u2) {
            const Complex overlap =
                trace_of_product(pauli_matrix(single_pauli(u1, u2, d), d).adjoint(), rest) / static_cast<double>(d.value());
            if (std::abs(std::abs(overlap) - 1.0) < 1e-9) return {f, {u1, u2}};
        }
    }
    throw Error(ErrorCode::NotClifford, "unitary is not of the form P_u U_F");
}

CliffordElement compose(const CliffordElement &a, const CliffordElement &b, PrimeDim d) {
    if (d.is_odd()) {
        const auto fu = apply(a.F, b.u, d);
        return {mul(a.F, b.F, d), {d.reduce(a.u[0] + fu[0]), d.reduce(a.u[1] + fu[1])}};
    }
    return identify_clifford(clifford_unitary(a, d) * clifford_unitary(b, d), d);
}

CliffordElement inverse(const CliffordElement &c, PrimeDim d) {
    if (d.is_odd()) {
        const SL2Zd finv = inverse(c.F, d);
        const auto v = apply(finv, c.u, d);
        return {finv, {d.reduce(-v[0]), d.reduce(-v[1])}};
    }
    return identify_clifford(clifford_unitary(c, d).adjoint(), d);
}

double clifford_trace_abs(const CliffordElement &c, PrimeDim d) {
    switch (trace_class(c, d)) {
        case TraceClass::Zero: return 0.0;
        case TraceClass::One: return 1.0;
        case TraceClass::SqrtD: return std::sqrt(static_cast<double>(d.value()));
        case TraceClass::D: return static_cast<double>(d.value());
    }
    return 0.0;
}

std::vector<CliffordElement> traceless_set(PrimeDim d) {
    if (!d.is_odd()) throw Error(ErrorCode::EvenDim, "traceless set is defined by odd-d trace formulas");
    std::vector<CliffordElement> out;
    for (const auto &c : enumerate_clifford(d)) {
        if (trace_class(c, d) == TraceClass::Zero) out.push_back(c);
    }
    return out;
}

std::size_t traceless_count_formula(PrimeDim d) {
    const std::size_t n = static_cast<std::size_t>(d.value());
    return (n * (n - 1) + 1) * (n * n - 1);
}

std::vector<std::vector<CliffordElement>> conjugacy_classes(std::span<const CliffordElement> subset, PrimeDim d) {
    std::size_t key_space = 1;
    for (int i = 0; i < 6; ++i) key_space *= d.value();
    std::vector<char> in_subset(key_space, 0), seen(key_space, 0);
    for (const auto &c : subset) in_subset[clifford_key(c, d)] = 1;

    std::vector<CliffordElement> ordered(subset.begin(), subset.end());
    std::sort(ordered.begin(), ordered.end());
    const auto group = enumerate_clifford(d);
    std::vector<CliffordElement> group_inverse;
    group_inverse.reserve(group.size());
    for (const auto &g : group) group_inverse.push_back(inverse(g, d));

    std::vector<std::vector<CliffordElement>> classes;
    for (const auto &rep : ordered) {
        if (seen[clifford_key(rep, d)]) continue;
        std::vector<CliffordElement> cls;
        for (std::size_t i = 0; i < group.size(); ++i) {
            const CliffordElement conj = compose(compose(group[i], rep, d), group_inverse[i], d);
            const std::size_t key = clifford_key(conj, d);
            if (!in_subset[key]) {
                throw Error(ErrorCode::BadConnectionSet, "subset is not closed under conjugation");
            }
            if (!seen[key]) {
                seen[key] = 1;
                cls.push_back(conj);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<CliffordElement> traceless_class_representatives(PrimeDim d) {
    if (!d.is_odd()) throw Error(ErrorCode::EvenDim, "traceless classes are listed for odd d");
    const int nu = smallest_nonresidue(d).value();
    std::vector<CliffordElement> reps{{SL2Zd::identity(), {1, 0}}};
    for (int u1 = 1; u1 <= (d.value() - 1) / 2; ++u1) reps.push_back({SL2Zd{1, 0, 1, 1}, {u1, 0}});
    for (int u1 = 1; u1 <= (d.value() - 1) / 2; ++u1) reps.push_back({SL2Zd{1, 0, nu, 1}, {u1, 0}});
    return reps;
}

JamiolkowskiState jamiolkowski_state(const CliffordElement &c, PrimeDim d) {
    const DenseMatrix u = clifford_unitary(c, d);
    const int n = d.value();
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    JamiolkowskiState out{c, std::vector<Complex>(static_cast<std::size_t>(n * n))};
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.vector[j * n + i] = u(i, j) * norm;
    return out;
}

}  // namespace qctx
