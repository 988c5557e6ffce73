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

#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "qctx/dense_matrix.hpp"
#include "qctx/modular.hpp"
#include "qctx/pauli.hpp"

namespace qctx {

/// F = [[alpha, beta], [gamma, delta]] with unit determinant mod d.
struct SL2Zd {
    int alpha = 1, beta = 0, gamma = 0, delta = 1;

    /// Validates the determinant; throws NotClifford otherwise.
    static SL2Zd make(int alpha, int beta, int gamma, int delta, PrimeDim d);
    static SL2Zd identity() { return {}; }

    int trace(PrimeDim d) const { return d.reduce(alpha + delta); }
    auto operator<=>(const SL2Zd &) const = default;
};

SL2Zd operator*(const SL2Zd &a, const SL2Zd &b);  // unreduced; use mul()
SL2Zd mul(const SL2Zd &a, const SL2Zd &b, PrimeDim d);
SL2Zd inverse(const SL2Zd &f, PrimeDim d);
std::array<int, 2> apply(const SL2Zd &f, std::array<int, 2> v, PrimeDim d);

/// C_(F|u) = P_(u1|u2) U_F, identified modulo global phase by (F, u).
struct CliffordElement {
    SL2Zd F;
    std::array<int, 2> u{0, 0};

    auto operator<=>(const CliffordElement &) const = default;
    std::string label() const;
};

/// Dense index in [0, d^6); unique per element.
std::size_t clifford_key(const CliffordElement &c, PrimeDim d);

std::vector<SL2Zd> enumerate_sl2(PrimeDim d);
/// All d^3 (d^2 - 1) elements, ordered by F (alpha, beta, gamma, delta) then u.
std::vector<CliffordElement> enumerate_clifford(PrimeDim d);

DenseMatrix symplectic_unitary(const SL2Zd &f, PrimeDim d);
DenseMatrix clifford_unitary(const CliffordElement &c, PrimeDim d);

/// Conjugation C P C^dagger as an exact phased Pauli, read off the dense
/// matrices. Throws NotClifford if the image is not a Pauli group element.
SymplecticPauli conjugate_pauli(const DenseMatrix &unitary, const SymplecticPauli &p, PrimeDim d);

/// Recovers (F, u) from a dense Clifford unitary known up to phase.
CliffordElement identify_clifford(const DenseMatrix &unitary, PrimeDim d);

/// Group product modulo phase. Odd d uses (F1 F2 | u1 + F1 u2); for d = 2 the
/// product is formed densely and re-identified.
CliffordElement compose(const CliffordElement &a, const CliffordElement &b, PrimeDim d);
CliffordElement inverse(const CliffordElement &c, PrimeDim d);

/// |Tr C_(F|u)| from the closed-form case analysis on beta, Tr F, gamma and u.
/// Throws EvenDim for d = 2.
double clifford_trace_abs(const CliffordElement &c, PrimeDim d);

/// {C : Tr C = 0}; throws EvenDim for d = 2.
std::vector<CliffordElement> traceless_set(PrimeDim d);
std::size_t traceless_count_formula(PrimeDim d);

/// Partition of `subset` (assumed closed under conjugation) into conjugacy
/// classes of the full group. Classes are ordered by their least element.
std::vector<std::vector<CliffordElement>> conjugacy_classes(std::span<const CliffordElement> subset, PrimeDim d);

/// Conjugacy class representatives for the traceless set:
/// (I | (1,0)), and ([[1,0],[1,1]] | (u1,0)), ([[1,0],[nu,1]] | (u1,0)) for
/// u1 in 1..(d-1)/2 with nu the least non-residue.
std::vector<CliffordElement> traceless_class_representatives(PrimeDim d);

struct JamiolkowskiState {
    CliffordElement source;
    std::vector<Complex> vector;  // (I (x) U)|Phi>, index j*d + i
};

JamiolkowskiState jamiolkowski_state(const CliffordElement &c, PrimeDim d);

}  // namespace qctx
