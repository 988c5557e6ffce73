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

#include <optional>
#include <string>
#include <vector>

#include "qctx/dense_matrix.hpp"
#include "qctx/graph.hpp"
#include "qctx/modular.hpp"
#include "qctx/pauli.hpp"

namespace qctx {

struct BellOperator {
    PrimeDim d;
    DenseMatrix matrix;
    int classical_bound = 0;
    std::vector<std::string> measurement_labels;  // "A_j = w^e (x|z)", "B_k = ..."
};

/// Largest dimension with a known local bound for the qudit CHSH operator.
inline constexpr int kMaxChshDim = 7;

/// Local (classical) bound of the qudit CHSH operator: 2, 9, 35, 84 for
/// d = 2, 3, 5, 7. Throws UnsupportedDim otherwise.
int chsh_classical_bound(PrimeDim d);

/// B = sum_{n in Z_d^*, j, k} w^{njk} A_j^n (x) B_k^n with
/// A_j = w^{j(j+1)} X Z^j and B_k = w^{(k^2 + 2k)/4} X Z^{k/2} for odd d, and
/// X(x)X + X(x)Y + Y(x)X - Y(x)Y for d = 2. Throws UnsupportedDim for d > 7.
BellOperator chsh_operator(PrimeDim d);

/// One rank-d term of the decomposition B = d * sum Pi - d^2 I.
struct ChshTerm {
    int j = 0, k = 0;
    SymplecticPauli label;  // (1,1 | j, k/2), unphased
    int eigen_index = 0;    // Pi_label[eigen_index]
};

struct ContextualityScenario {
    std::string name;
    int hilbert_dim = 0;
    std::vector<Projector> projectors;
    Graph graph;
    DenseMatrix sigma;  // sum of the projectors
    double qm_value = 0;  // lambda_max(sigma)
    std::vector<Complex> qm_state;  // a maximizing eigenvector
    /// Filled by evaluate_scenario.
    std::optional<int> nchv_bound;
    std::optional<double> theta_bound;
    /// CHSH only: the rank-d terms in (j, k) order.
    std::vector<ChshTerm> terms;
};

/// The d^2 labelled terms, derived from the phases of A_j (x) B_k.
std::vector<ChshTerm> chsh_terms(PrimeDim d);

/// The d^3 rank-1 projectors of the CHSH operator and their orthogonality
/// graph. Throws DecompositionMismatch if B = d * sum Pi - d^2 I fails
/// entrywise at 1e-9, or if the rank-1 projectors are not distinct.
ContextualityScenario chsh_scenario(PrimeDim d);

/// Every vertex degree equals (2d - 1)(d - 1).
bool regularity_conjecture_check(const ContextualityScenario &s, PrimeDim d);

struct PeresMerminRecord {
    std::vector<std::vector<std::string>> cells;  // 3 x 3 operator names
    bool contexts_commute = false;
    double row_deviation = 0;     // max_ij |R_i - I|
    double column_deviation = 0;  // max_ij |C_j + I|
    int consistent_assignments = 0;
    int assignments_scanned = 0;
    std::vector<Projector> projectors;  // 24, context-major
    Graph graph;
    /// projector index -> vertex of the entangled two-qubit family graph,
    /// matched by projector equality; empty when some projector has no match.
    std::vector<int> bijection;
    bool isomorphic_to_entangled = false;
};

PeresMerminRecord peres_mermin();

/// The symmetric pentagon of qutrit rank-1 projectors.
ContextualityScenario kcbs_scenario();

/// Six two-qubit stabilizer projectors with 4 * sigma - 6 I equal to the d = 2
/// CHSH operator whose orthogonality graph is the complement of the 5-pan.
/// Throws SearchFailed when no such set exists among the stabilizer states.
ContextualityScenario alternate_chsh_scenario();

}  // namespace qctx
