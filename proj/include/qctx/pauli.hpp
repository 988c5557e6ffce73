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

#include <compare>
#include <string>
#include <vector>

#include "qctx/dense_matrix.hpp"
#include "qctx/modular.hpp"

namespace qctx {

/// Order of the global phase unit carried by Pauli group elements: i for qubits
/// (order 4), omega = exp(2 pi i / d) for odd d.
int phase_order(PrimeDim d) noexcept;
Complex phase_value(PrimeDim d, int exponent);
/// omega^k = exp(2 pi i k / d)
Complex root_of_unity(PrimeDim d, int k);

/// An n-qudit Pauli group element phase * P_(x|z).
///
/// P_(x|z) = (X^x1 (x) X^x2 ...)(Z^z1 (x) Z^z2 ...) for odd d. For d = 2 the
/// operator additionally carries i^{x.z}, so P_(1|1) = Y and every unphased
/// label is Hermitian. `phase` counts units of phase_value(d, 1).
struct SymplecticPauli {
    std::vector<int> x;
    std::vector<int> z;
    int phase = 0;

    SymplecticPauli() = default;
    SymplecticPauli(std::vector<int> xs, std::vector<int> zs, int phase_exponent = 0)
        : x(std::move(xs)), z(std::move(zs)), phase(phase_exponent) {}

    std::size_t num_qudits() const noexcept { return x.size(); }
    bool is_identity() const noexcept;
    /// "(x1,x2|z1,z2)" without the phase.
    std::string label() const;

    auto operator<=>(const SymplecticPauli &) const = default;
};

/// Reduces entries mod d and the phase mod phase_order(d); throws ShapeMismatch
/// when x and z lengths differ or are empty.
SymplecticPauli normalized(SymplecticPauli p, PrimeDim d);

SymplecticPauli single_pauli(int x, int z, PrimeDim d, int phase = 0);
/// a (x) b with phases added.
SymplecticPauli tensor(const SymplecticPauli &a, const SymplecticPauli &b, PrimeDim d);
/// Exact group product a * b.
SymplecticPauli multiply(const SymplecticPauli &a, const SymplecticPauli &b, PrimeDim d);
SymplecticPauli power(const SymplecticPauli &a, int k, PrimeDim d);
/// Inverse; also the adjoint since Pauli group elements are unitary.
SymplecticPauli inverse(const SymplecticPauli &a, PrimeDim d);

/// Symplectic form sum_i (x_i z'_i - x'_i z_i) mod d.
int symplectic_form(const SymplecticPauli &p, const SymplecticPauli &q, PrimeDim d);
bool symplectic_commutes(const SymplecticPauli &p, const SymplecticPauli &q, PrimeDim d);

/// Largest d^n accepted by the dense constructors.
inline constexpr std::size_t kMaxMatrixDim = 256;

/// Dense d^n x d^n matrix of the element, phase included.
DenseMatrix pauli_matrix(const SymplecticPauli &p, PrimeDim d, std::size_t max_dim = kMaxMatrixDim);

struct Projector {
    DenseMatrix matrix;
    int rank = 0;
    std::string label;  // "(x|z)[k]"
};

std::string projector_label(const SymplecticPauli &p, int k);

/// Projector onto the omega^k eigenspace of P_(x|z), (1/d) sum_j omega^{-jk} P^j.
/// The label selects the operator; p.phase is ignored. Throws IdentityPauli for
/// the identity label.
Projector eigenprojector(const SymplecticPauli &p, int k, PrimeDim d);

/// Splits the rank-d eigenprojector of a two-qudit label into the d product
/// projectors Pi_(x1|z1)[a] (x) Pi_(x2|z2)[k-a], ordered by a. Throws
/// IdentityFactor when either factor is the identity.
std::vector<Projector> rank1_decompose(const SymplecticPauli &p, int k, PrimeDim d);

}  // namespace qctx
