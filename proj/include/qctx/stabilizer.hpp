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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qctx/clifford.hpp"
#include "qctx/dense_matrix.hpp"
#include "qctx/modular.hpp"
#include "qctx/pauli.hpp"

namespace qctx {

/// A pure n-qudit stabilizer state held exactly as its stabilizer group.
///
/// The group is stored in full (d^n elements, each an index of the symplectic
/// vector plus a phase exponent) next to a canonical generator list: the
/// reduced row-echelon basis of the underlying Lagrangian subspace with pivots
/// taken in (x_1..x_n | z_1..z_n) column order, each row carrying the phase of
/// the group element it names. Two states are equal iff their canonical
/// generators are equal.
class StabilizerState {
public:
    struct Element {
        std::uint32_t vector;  // base-d digits x_1..x_n z_1..z_n, x_1 most significant
        std::uint8_t phase;    // phase exponent, units of phase_value(d, 1)
        auto operator<=>(const Element &) const = default;
    };

    /// Builds the state stabilized by `generators`. Throws ShapeMismatch unless
    /// there are exactly n pairwise commuting, independent generators on n
    /// qudits whose group contains no nontrivial multiple of the identity.
    static StabilizerState from_generators(PrimeDim d, std::span<const SymplecticPauli> generators,
                                           std::string label = {});

    PrimeDim dim() const noexcept { return d_; }
    int num_qudits() const noexcept { return n_; }
    const std::string &label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    const std::vector<SymplecticPauli> &generators() const noexcept { return generators_; }
    const std::vector<Element> &elements() const noexcept { return elements_; }

    /// Phase exponent of the element with this vector, or -1 when absent.
    int phase_of(std::uint32_t vector) const;
    /// Canonical rows of the Lagrangian subspace, phases stripped.
    std::vector<std::vector<int>> lagrangian_rows() const;

    /// (1/d^n) sum over group elements. Throws DimensionOverflow past kMaxMatrixDim.
    DenseMatrix projector() const;

    friend bool operator==(const StabilizerState &a, const StabilizerState &b) {
        return a.d_ == b.d_ && a.generators_ == b.generators_;
    }
    friend bool operator<(const StabilizerState &a, const StabilizerState &b) {
        if (a.d_.value() != b.d_.value()) return a.d_.value() < b.d_.value();
        return a.generators_ < b.generators_;
    }

private:
    StabilizerState(PrimeDim d) : d_(d) {}

    PrimeDim d_;
    int n_ = 0;
    std::vector<SymplecticPauli> generators_;
    std::vector<Element> elements_;
    std::string label_;
};

std::uint32_t vector_index(const SymplecticPauli &p, PrimeDim d);
SymplecticPauli pauli_from_index(std::uint32_t index, int num_qudits, PrimeDim d);

/// Phase exponent of the stabilizer element lambda^{-1} P for eigenvalue omega^k.
int eigenvalue_phase(int k, PrimeDim d);

/// Exact Tr(Pi_s Pi_t) == 0: the groups share a vector carried with different phases.
/// Throws ShapeMismatch for states of different d or n.
bool is_orthogonal(const StabilizerState &s, const StabilizerState &t);

/// The omega^k eigenstate of a single-qudit P_(x|z) (p.phase ignored).
StabilizerState single_qudit_eigenstate(const SymplecticPauli &p, int k, PrimeDim d);
StabilizerState product_state(const StabilizerState &a, const StabilizerState &b);
/// (I (x) U)|Phi> for U = C_(F|u), as exact stabilizer generators.
StabilizerState jamiolkowski_stabilizer(const CliffordElement &c, PrimeDim d);

enum class FamilyKind { single, separable, entangled, total };
std::string_view family_name(FamilyKind kind);
/// Accepts "single", "sep"/"separable", "ent"/"entangled", "tot"/"total".
FamilyKind parse_family(std::string_view name);

struct StateFamily {
    FamilyKind kind;
    PrimeDim d;
    std::vector<StabilizerState> states;
};

/// The single-qudit MUB operators P_(0|1), P_(1|0), P_(1|1), ..., P_(1|d-1).
std::vector<SymplecticPauli> mub_operators(PrimeDim d);

/// The d + 1 eigenbases of the MUB operators, basis-major.
StateFamily enumerate_single(PrimeDim d);

struct EnumerationLimits {
    int max_dim = 7;
};

/// Separable: ordered pairs over enumerate_single. Entangled: Jamiolkowski
/// states in enumerate_clifford order. Total: separable followed by entangled.
/// Throws BudgetExceeded when d > limits.max_dim.
StateFamily enumerate_two_qudit(PrimeDim d, FamilyKind kind, EnumerationLimits limits = {});

std::size_t expected_family_size(PrimeDim d, FamilyKind kind);

/// Groups states that share a Lagrangian subspace (same stabilizer up to
/// phases). Each group is an orthonormal set. Groups are ordered by first member.
std::vector<std::vector<int>> basis_partition(const StateFamily &family);

/// Indices of states whose stabilizer is exactly {D_v : v in L} with
/// D_v = omega^{x.z/2} X^x Z^z (symmetric phase convention, odd d). Any two of
/// them agree on every shared vector, so they are pairwise non-orthogonal.
/// Throws EvenDim for d = 2.
std::vector<int> weyl_origin_states(const StateFamily &family);

}  // namespace qctx
