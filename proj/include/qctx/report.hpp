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

#include "json.hpp"
#include "qctx/bell.hpp"
#include "qctx/graph.hpp"
#include "qctx/invariants.hpp"
#include "qctx/stabilizer.hpp"

namespace qctx {

inline constexpr int kSchemaVersion = 1;

/// Structural certificates a caller may know for a graph. Every hint is
/// verified before use.
struct StructuralHints {
    std::vector<int> independent_set;
    std::vector<std::vector<int>> clique_cover;
    std::vector<int> coloring;
    /// The graph is a Cayley graph with a conjugation-closed connection set.
    bool normal_cayley = false;
};

struct InvariantRequest {
    double budget_seconds = 60;  // per invariant
    unsigned jobs = 1;
    double tolerance = 1e-6;     // theta bracket width
    bool alpha = true, omega = true, chi = true, cover = true, alpha_star = true, theta = true;
    std::size_t packing_cap = kDefaultPackingVertices;
    std::size_t sdp_cap = kDefaultSdpVertices;
    StructuralHints hints;
    /// Hilbert-space dimension of the projectors, for the chi > D flag.
    std::optional<int> hilbert_dim;
};

struct InvariantReport {
    std::string graph_id;
    std::size_t n = 0, edges = 0;
    std::optional<std::size_t> regular_degree;

    CliqueResult alpha, omega;
    ColoringResult chi;
    CoverResult cover;
    PackingResult alpha_star;
    ThetaResult theta;
    SolveStatus alpha_status = SolveStatus::skipped, omega_status = SolveStatus::skipped,
                chi_status = SolveStatus::skipped, cover_status = SolveStatus::skipped,
                alpha_star_status = SolveStatus::skipped, theta_status = SolveStatus::skipped;

    /// alpha < chi-bar with both exact (state-independent witness possible).
    std::optional<bool> alpha_below_cover;
    /// chi > D with chi exact.
    std::optional<bool> chi_above_dim;
    std::optional<int> hilbert_dim;
    /// alpha <= theta + tol <= alpha* + tol <= chi-bar over the exact members;
    /// nullopt when fewer than two of them are available.
    std::optional<bool> sandwich;
};

InvariantReport compute_invariants(const Graph &g, std::string graph_id, const InvariantRequest &request);

/// Certificates the enumeration structure provides for a state family:
/// basis partition (cover), Weyl-origin states (independent set, odd d), and
/// for entangled odd d the colouring by the translation part u of each
/// Clifford label, plus the normal Cayley flag when `cayley_checked` is set.
StructuralHints family_hints(const StateFamily &family, bool cayley_checked);

/// Builds Cayley(C_d, T) on the enumerate_clifford order and compares edge
/// sets with the entangled orthogonality graph (odd d).
bool cayley_matches_entangled(PrimeDim d, const Graph &entangled);

/// Invariants of the scenario graph; fills nchv_bound (alpha, when exact)
/// and theta_bound (theta upper end, when computed).
InvariantReport evaluate_scenario(ContextualityScenario &s, const InvariantRequest &request);

nlohmann::json report_json(const InvariantReport &r);
std::string report_to_json(const InvariantReport &r, int indent = 2);

/// Projector labels, edge list and bounds {nchv, qm_stabilizer, theta}.
nlohmann::json scenario_json(const ContextualityScenario &s);

}  // namespace qctx
