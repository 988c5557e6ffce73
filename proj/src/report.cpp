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


#include "qctx/report.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"
#include "qctx/clifford.hpp"
#include "qctx/error.hpp"

namespace qctx {

namespace {

constexpr double kSandwichSlack = 1e-6;

std::size_t colours_in(const std::vector<int> &colouring) {
    int top = -1;
    for (int c : colouring) top = std::max(top, c);
    return static_cast<std::size_t>(top + 1);
}

// Colour of a single-qudit state: its eigenvalue index inside the basis.
int single_colour(std::size_t index, int d) { return static_cast<int>(index % d); }

}  // namespace

InvariantReport compute_invariants(const Graph &g, std::string graph_id, const InvariantRequest &request) {
    InvariantReport r;
    r.graph_id = std::move(graph_id);
    r.n = g.size();
    r.edges = g.num_edges();
    r.regular_degree = g.regular_degree();
    r.hilbert_dim = request.hilbert_dim;
    const StructuralHints &hints = request.hints;

    if (!hints.independent_set.empty() && !is_independent_set(g, hints.independent_set)) {
        throw Error(ErrorCode::InvalidHint, "independent set hint is not independent");
    }
    if (!hints.clique_cover.empty() && !is_clique_cover(g, hints.clique_cover)) {
        throw Error(ErrorCode::InvalidHint, "cover hint is not a cover by cliques");
    }
    if (!hints.coloring.empty() && !is_proper_coloring(g, hints.coloring)) {
        throw Error(ErrorCode::InvalidHint, "colouring hint is not proper");
    }

    if (request.omega) {
        CliqueOptions o;
        o.budget_seconds = request.budget_seconds;
        o.jobs = request.jobs;
        if (!hints.coloring.empty()) o.known_upper = colours_in(hints.coloring);
        r.omega = max_clique(g, o);
        r.omega_status = r.omega.status;
    }
    if (request.alpha) {
        CliqueOptions o;
        o.budget_seconds = request.budget_seconds;
        o.jobs = request.jobs;
        o.initial = hints.independent_set;
        if (!hints.clique_cover.empty()) o.known_upper = hints.clique_cover.size();
        r.alpha = independence_number(g, o);
        r.alpha_status = r.alpha.status;
    }
    if (request.chi) {
        ColoringOptions o;
        o.budget_seconds = request.budget_seconds;
        o.hint = hints.coloring;
        o.normal_cayley = hints.normal_cayley;
        if (r.omega_status != SolveStatus::skipped) o.lower_bound = r.omega.value;
        if (r.omega_status == SolveStatus::exact) o.exact_omega = r.omega.value;
        if (r.alpha_status == SolveStatus::exact) o.exact_alpha = r.alpha.value;
        r.chi = chromatic_number(g, o);
        r.chi_status = r.chi.status;
    }
    if (request.cover) {
        CoverOptions o;
        o.budget_seconds = request.budget_seconds;
        o.hint = hints.clique_cover;
        if (r.alpha_status != SolveStatus::skipped) o.lower_bound = r.alpha.value;
        r.cover = clique_cover(g, o);
        r.cover_status = r.cover.status;
    }
    if (request.alpha_star && r.n <= request.packing_cap) {
        try {
            r.alpha_star = fractional_packing(g, request.packing_cap, request.budget_seconds);
            r.alpha_star_status = r.alpha_star.status;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
        }
    }
    if (request.theta && r.n <= request.sdp_cap) {
        ThetaOptions o;
        o.tolerance = request.tolerance;
        o.budget_seconds = request.budget_seconds;
        o.max_vertices = request.sdp_cap;
        r.theta = lovasz_theta(g, o);
        r.theta_status = r.theta.status;
    }

    if (r.alpha_status == SolveStatus::exact && r.cover_status == SolveStatus::exact) {
        r.alpha_below_cover = r.alpha.value < r.cover.value;
    }
    if (r.hilbert_dim && r.chi_status == SolveStatus::exact) {
        r.chi_above_dim = r.chi.value > static_cast<std::size_t>(*r.hilbert_dim);
    }

    // Every reported witness and bracket end is valid regardless of status,
    // so the chain can be checked on whatever was computed.
    int present = 0;
    bool ok = true;
    const bool has_alpha = r.alpha_status != SolveStatus::skipped;
    const bool has_theta = r.theta_status != SolveStatus::skipped;
    const bool has_star = r.alpha_star_status != SolveStatus::skipped;
    const bool has_cover = r.cover_status != SolveStatus::skipped;
    present = has_alpha + has_theta + has_star + has_cover;
    const double a = static_cast<double>(r.alpha.value);
    const double cover = static_cast<double>(r.cover.value);
    if (has_alpha && has_theta) ok &= a <= r.theta.upper + kSandwichSlack;
    if (has_alpha && has_star) ok &= a <= r.alpha_star.value.approx + kSandwichSlack;
    if (has_alpha && has_cover) ok &= a <= cover;
    if (has_theta && has_star) ok &= r.theta.lower <= r.alpha_star.value.approx + kSandwichSlack;
    if (has_theta && has_cover) ok &= r.theta.lower <= cover + kSandwichSlack;
    if (has_star && has_cover) ok &= r.alpha_star.value.approx <= cover + kSandwichSlack;
    if (present >= 2) r.sandwich = ok;
    return r;
}

StructuralHints family_hints(const StateFamily &family, bool cayley_checked) {
    StructuralHints h;
    const int d = family.d.value();
    h.clique_cover = basis_partition(family);
    if (d % 2 == 1) h.independent_set = weyl_origin_states(family);

    const std::size_t single = static_cast<std::size_t>(d) * (d + 1);
    switch (family.kind) {
    case FamilyKind::single:
        for (std::size_t i = 0; i < family.states.size(); ++i) h.coloring.push_back(single_colour(i, d));
        break;
    case FamilyKind::separable:
        // Same eigen index on both factors never gives an orthogonal pair.
        for (std::size_t i = 0; i < family.states.size(); ++i) {
            h.coloring.push_back(single_colour(i / single, d) * d + single_colour(i % single, d));
        }
        break;
    case FamilyKind::entangled:
        // Elements sharing u differ by some (F|0), and those have nonzero trace.
        if (d % 2 == 1) {
            for (const auto &c : enumerate_clifford(family.d)) h.coloring.push_back(c.u[0] * d + c.u[1]);
            h.normal_cayley = cayley_checked;
        }
        break;
    case FamilyKind::total:
        break;
    }
    return h;
}

bool cayley_matches_entangled(PrimeDim d, const Graph &entangled) {
    const auto elements = enumerate_clifford(d);
    const auto connection = traceless_set(d);
    return cayley_graph(elements, connection, d) == entangled;
}

InvariantReport evaluate_scenario(ContextualityScenario &s, const InvariantRequest &request) {
    InvariantRequest q = request;
    if (!q.hilbert_dim) q.hilbert_dim = s.hilbert_dim;
    InvariantReport r = compute_invariants(s.graph, s.name, q);
    s.nchv_bound.reset();
    s.theta_bound.reset();
    if (r.alpha_status == SolveStatus::exact) s.nchv_bound = static_cast<int>(r.alpha.value);
    if (r.theta_status != SolveStatus::skipped) s.theta_bound = r.theta.upper;
    return r;
}

nlohmann::json scenario_json(const ContextualityScenario &s) {
    using nlohmann::json;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = s.name;
    j["hilbert_dim"] = s.hilbert_dim;
    json labels = json::array();
    for (const auto &p : s.projectors) labels.push_back(p.label);
    j["projectors"] = labels;
    j["vertices"] = s.graph.size();
    json edges = json::array();
    for (auto [a, b] : s.graph.edges()) edges.push_back({a, b});
    j["edges"] = edges;
    json bounds;
    bounds["nchv"] = s.nchv_bound ? json(*s.nchv_bound) : json(nullptr);
    bounds["qm_stabilizer"] = s.qm_value;
    bounds["theta"] = s.theta_bound ? json(*s.theta_bound) : json(nullptr);
    j["bounds"] = bounds;
    return j;
}

std::string report_to_json(const InvariantReport &r, int indent) { return report_json(r).dump(indent); }

nlohmann::json report_json(const InvariantReport &r) {
    using nlohmann::json;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["graph"] = r.graph_id;
    j["vertices"] = r.n;
    j["edges"] = r.edges;
    j["regular_degree"] = r.regular_degree ? json(*r.regular_degree) : json(nullptr);

    auto clique = [](const CliqueResult &c, SolveStatus s) {
        json o;
        o["status"] = status_name(s);
        if (s == SolveStatus::skipped) return o;
        o["value"] = c.value;
        o["upper_bound"] = c.upper_bound;
        o["witness"] = c.witness;
        return o;
    };
    j["alpha"] = clique(r.alpha, r.alpha_status);
    j["omega"] = clique(r.omega, r.omega_status);

    json chi;
    chi["status"] = status_name(r.chi_status);
    if (r.chi_status != SolveStatus::skipped) {
        chi["value"] = r.chi.value;
        chi["lower_bound"] = r.chi.lower_bound;
        chi["method"] = r.chi.method;
        chi["coloring"] = r.chi.coloring;
    }
    j["chi"] = chi;

    json cover;
    cover["status"] = status_name(r.cover_status);
    if (r.cover_status != SolveStatus::skipped) {
        cover["value"] = r.cover.value;
        cover["lower_bound"] = r.cover.lower_bound;
        cover["method"] = r.cover.method;
        cover["cover"] = r.cover.cover;
    }
    j["clique_cover"] = cover;

    json star;
    star["status"] = status_name(r.alpha_star_status);
    if (r.alpha_star_status != SolveStatus::skipped) {
        star["value"] = r.alpha_star.value.text;
        star["approx"] = r.alpha_star.value.approx;
        star["maximal_cliques"] = r.alpha_star.num_maximal_cliques;
        json w = json::array();
        for (const auto &x : r.alpha_star.weights) w.push_back(x.text);
        star["weights"] = w;
    }
    j["alpha_star"] = star;

    json theta;
    theta["status"] = status_name(r.theta_status);
    if (r.theta_status != SolveStatus::skipped) {
        theta["value"] = r.theta.value;
        theta["lower"] = r.theta.lower;
        theta["upper"] = r.theta.upper;
        theta["gap"] = r.theta.gap();
    }
    j["theta"] = theta;

    json flags;
    flags["hilbert_dim"] = r.hilbert_dim ? json(*r.hilbert_dim) : json(nullptr);
    flags["alpha_below_cover"] = r.alpha_below_cover ? json(*r.alpha_below_cover) : json(nullptr);
    flags["chi_above_dim"] = r.chi_above_dim ? json(*r.chi_above_dim) : json(nullptr);
    flags["sandwich"] = r.sandwich ? json(*r.sandwich) : json(nullptr);
    j["flags"] = flags;
    return j;
}

}  // namespace qctx
