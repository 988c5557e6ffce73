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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qctx/bell.hpp"
#include "qctx/clifford.hpp"
#include "qctx/error.hpp"
#include "qctx/invariants.hpp"
#include "qctx/report.hpp"
#include "qctx/stabilizer.hpp"

namespace {

using namespace qctx;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph family_graph(int p, FamilyKind k) { return orthogonality_graph(enumerate_two_qudit(PrimeDim(p), k)); }

InvariantReport family_report(int p, FamilyKind kind, bool alpha_star_theta = false) {
    const PrimeDim d(p);
    const StateFamily fam = enumerate_two_qudit(d, kind);
    const Graph g = orthogonality_graph(fam);
    InvariantRequest q;
    q.alpha_star = q.theta = alpha_star_theta;
    q.hilbert_dim = p * p;
    const bool cayley = kind == FamilyKind::entangled && p % 2 == 1 && cayley_matches_entangled(d, g);
    q.hints = family_hints(fam, cayley);
    return compute_invariants(g, std::string(family_name(kind)), q);
}

void counts(Outcome &o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int p : {2, 3, 5}) {
        const std::size_t sep = enumerate_two_qudit(PrimeDim(p), FamilyKind::separable).states.size();
        const std::size_t ent = enumerate_two_qudit(PrimeDim(p), FamilyKind::entangled).states.size();
        const std::size_t tot = enumerate_two_qudit(PrimeDim(p), FamilyKind::total).states.size();
        const std::size_t q = p;
        o.check(sep == q * q * (q + 1) * (q + 1), "sep d=" + std::to_string(p));
        o.check(ent == q * q * q * (q * q - 1), "ent d=" + std::to_string(p));
        o.check(tot == q * q * (q * q + 1) * (q + 1), "tot d=" + std::to_string(p));
        o.detail << "d=" << p << ":" << sep << "/" << ent << "/" << tot << " ";
    }
    const double t = seconds_since(t0);
    o.check(t < 60, "runtime");
    o.detail << "in " << t << "s";
}

void independence(Outcome &o) {
    struct Case {
        int p;
        FamilyKind kind;
        std::size_t alpha;
    };
    const std::vector<Case> cases{{2, FamilyKind::separable, 9},  {3, FamilyKind::separable, 16},
                                  {5, FamilyKind::separable, 36}, {2, FamilyKind::entangled, 5},
                                  {3, FamilyKind::entangled, 24}, {2, FamilyKind::total, 12},
                                  {3, FamilyKind::total, 40},     {5, FamilyKind::entangled, 120},
                                  {5, FamilyKind::total, 156}};
    for (const auto &c : cases) {
        const InvariantReport r = family_report(c.p, c.kind);
        const std::string tag = std::string(family_name(c.kind)) + " d=" + std::to_string(c.p);
        o.check(r.alpha_status == SolveStatus::exact && r.alpha.value == c.alpha, tag);
        o.detail << tag << ":" << r.alpha.value << " ";
    }
    // Pure search without any certificate; d = 5 total needs the certificates.
    for (const auto &c : cases) {
        if (c.p == 5 && c.kind == FamilyKind::total) continue;
        const CliqueResult r = independence_number(family_graph(c.p, c.kind));
        o.check(r.status == SolveStatus::exact && r.value == c.alpha, "unhinted search");
    }
}

void covers(Outcome &o) {
    struct Case {
        int p;
        FamilyKind kind;
        std::size_t cover;
    };
    const std::vector<Case> cases{{2, FamilyKind::separable, 9},  {3, FamilyKind::separable, 16},
                                  {5, FamilyKind::separable, 36}, {2, FamilyKind::entangled, 6},
                                  {3, FamilyKind::entangled, 24}, {5, FamilyKind::entangled, 120},
                                  {2, FamilyKind::total, 15},     {3, FamilyKind::total, 40}};
    for (const auto &c : cases) {
        const PrimeDim d(c.p);
        const StateFamily fam = enumerate_two_qudit(d, c.kind);
        const Graph g = orthogonality_graph(fam);
        const auto partition = basis_partition(fam);
        const std::string tag = std::string(family_name(c.kind)) + " d=" + std::to_string(c.p);
        o.check(is_clique_cover(g, partition) && partition.size() == c.cover, tag + " partition");
        const InvariantReport r = family_report(c.p, c.kind);
        o.check(r.cover_status == SolveStatus::exact && r.cover.value == c.cover, tag + " exact");
        o.detail << tag << ":" << r.cover.value << " ";
    }
}

void sic(Outcome &o) {
    const InvariantReport q = family_report(2, FamilyKind::entangled);
    o.check(q.alpha.value == 5 && q.chi.value == 5 && q.chi_status == SolveStatus::exact, "d=2 values");
    o.check(q.chi_above_dim == std::optional<bool>(true), "d=2 flag");
    const InvariantReport t = family_report(3, FamilyKind::entangled);
    o.check(t.chi.value == 9 && t.chi.method == "normal-cayley" && t.alpha.value * t.omega.value == t.n,
            "d=3 normal Cayley route");
    o.check(t.chi_above_dim == std::optional<bool>(false), "d=3 flag");
    o.detail << "d=2 chi=" << q.chi.value << " > 4; d=3 chi=" << t.chi.value << " via " << t.chi.method << ", "
             << t.alpha.value << "*" << t.omega.value << "=" << t.n;
}

void traceless(Outcome &o) {
    for (int p : {3, 5, 7}) {
        const PrimeDim d(p);
        const auto T = traceless_set(d);
        const std::size_t formula = static_cast<std::size_t>(p * (p - 1) + 1) * (p * p - 1);
        std::size_t class_sum = 0;
        for (const auto &c : conjugacy_classes(T, d)) class_sum += c.size();
        o.check(T.size() == formula && class_sum == formula, "d=" + std::to_string(p));
        o.detail << "d=" << p << ":" << T.size() << " ";
    }
    const auto t0 = std::chrono::steady_clock::now();
    const bool same = cayley_matches_entangled(PrimeDim(3), family_graph(3, FamilyKind::entangled));
    o.check(same, "Cayley edge identity");
    o.detail << "cayley d=3 identical in " << seconds_since(t0) << "s";
}

void trace_formula(Outcome &o) {
    // |C_3| = 216 elements; d = 5 adds all 3000.
    for (int p : {3, 5}) {
        const PrimeDim d(p);
        double worst = 0;
        const auto all = enumerate_clifford(d);
        for (const auto &c : all) {
            worst = std::max(worst, std::abs(std::abs(clifford_unitary(c, d).trace()) - clifford_trace_abs(c, d)));
        }
        o.check(worst < 1e-9, "d=" + std::to_string(p));
        o.detail << "d=" << p << ": " << all.size() << " elements, max dev " << worst << " ";
    }
}

void chsh(Outcome &o) {
    const std::map<int, std::tuple<std::size_t, double, double>> table{
        {2, {3, 3.414, 3.414}}, {3, {6, 6.412, 7.098}}, {5, {12, 13.090, 18.090}}, {7, {19, 19.411, 0}}};
    for (const auto &[p, row] : table) {
        const auto [alpha, lambda, theta] = row;
        const PrimeDim d(p);
        ContextualityScenario s = chsh_scenario(d);
        const std::string tag = "d=" + std::to_string(p);
        o.check(s.graph.size() == static_cast<std::size_t>(p * p * p), tag + " size");
        o.check(s.graph.regular_degree() == std::optional<std::size_t>((2 * p - 1) * (p - 1)), tag + " regularity");
        CliqueOptions co;
        co.budget_seconds = 600;
        const CliqueResult a = independence_number(s.graph, co);
        o.check(a.status == SolveStatus::exact && a.value == alpha, tag + " alpha");
        o.check(p * static_cast<int>(a.value) - p * p == chsh_classical_bound(d), tag + " Bell bound");
        o.check(std::abs(s.qm_value - lambda) < 1e-3, tag + " lambda_max");
        o.detail << tag << ": alpha=" << a.value << " lambda=" << s.qm_value;
        if (p <= 5) {
            ThetaOptions to;
            to.budget_seconds = 600;
            const ThetaResult t = lovasz_theta(s.graph, to);
            o.check(std::abs(t.value - theta) < (p == 5 ? 5e-2 : 1e-3), tag + " theta");
            o.detail << " theta=" << t.value;
        } else {
            o.check(s.graph.size() > kDefaultSdpVertices, tag + " theta skipped by cap");
            o.detail << " theta=skipped";
        }
        o.detail << "; ";
    }
}

void cycles(Outcome &o) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g2 = chsh_scenario(PrimeDim(2)).graph;
    o.check(count_induced_cycles(g2, 5) == 8, "eight pentagons");
    // The complement of C5 is C5 itself; C7 and its complement must be absent.
    const auto e2 = induced_odd_cycles(g2, 3);
    o.check(e2.size() == 2 && e2[1].cycle == CycleStatus::absent && e2[1].anticycle == CycleStatus::absent,
            "no other odd cycles");
    o.check(seconds_since(t0) < 60, "d=2 runtime");
    const Graph g3 = chsh_scenario(PrimeDim(3)).graph;
    for (const auto &e : induced_odd_cycles(g3, 4)) {
        o.check(e.cycle == CycleStatus::found && is_induced_cycle(g3, e.cycle_witness), "d=3 k=" + std::to_string(e.k));
        o.detail << "d=3 C" << 2 * e.k + 1 << " found ";
    }
    o.detail << "; d=2 pentagons=8";
}

void peres_mermin_square(Outcome &o) {
    const PeresMerminRecord pm = peres_mermin();
    o.check(pm.contexts_commute, "contexts commute");
    o.check(pm.row_deviation < 1e-12 && pm.column_deviation < 1e-12, "row/column products");
    o.check(pm.assignments_scanned == 512 && pm.consistent_assignments == 0, "assignment scan");
    const Graph ent = family_graph(2, FamilyKind::entangled);
    o.check(pm.bijection.size() == 24 && is_isomorphism(pm.graph, ent, pm.bijection), "bijection");
    o.detail << pm.consistent_assignments << "/" << pm.assignments_scanned << " consistent, bijection verified";
}

void kcbs_and_sandwich(Outcome &o) {
    ContextualityScenario k = kcbs_scenario();
    const InvariantReport r = evaluate_scenario(k, {});
    o.check(r.alpha.value == 2, "alpha(C5)");
    o.check(std::abs(r.theta.value - std::sqrt(5.0)) < 1e-5, "theta(C5)");
    o.check(r.alpha_star.value.text == "5/2", "alpha*(C5)");
    o.detail << "C5: 2, " << r.theta.value << ", " << r.alpha_star.value.text << "; sandwich on ";

    std::vector<std::pair<std::string, Graph>> graphs{{"kcbs", k.graph},
                                                      {"alt-chsh", alternate_chsh_scenario().graph},
                                                      {"chsh d=2", chsh_scenario(PrimeDim(2)).graph},
                                                      {"chsh d=3", chsh_scenario(PrimeDim(3)).graph},
                                                      {"pm", peres_mermin().graph},
                                                      {"single d=3", orthogonality_graph(enumerate_single(PrimeDim(3)))},
                                                      {"sep d=2", family_graph(2, FamilyKind::separable)},
                                                      {"ent d=2", family_graph(2, FamilyKind::entangled)},
                                                      {"tot d=2", family_graph(2, FamilyKind::total)},
                                                      {"sep d=3", family_graph(3, FamilyKind::separable)}};
    for (int i = 0; i < 5; ++i) graphs.push_back({"random", oracle::random_graph(12, 0.5, 50 + i)});
    for (const auto &[name, g] : graphs) {
        const InvariantReport s = compute_invariants(g, name, {});
        const bool ok = s.sandwich.value_or(false) && s.theta_status != SolveStatus::skipped &&
                        s.alpha_star_status == SolveStatus::exact;
        o.check(ok, name);
    }
    o.detail << graphs.size() << " graphs";
}

void alternate(Outcome &o) {
    ContextualityScenario s = alternate_chsh_scenario();
    const DenseMatrix lhs = s.sigma * Complex(4) - DenseMatrix::identity(4) * Complex(6);
    const double dev = max_abs_diff(lhs, chsh_operator(PrimeDim(2)).matrix);
    o.check(s.projectors.size() == 6 && dev < 1e-9, "identity");
    o.check(find_isomorphism(s.graph, complement(pan_graph(5))).has_value(), "complement of 5-pan");
    const InvariantReport r = evaluate_scenario(s, {});
    o.check(r.alpha.value == 2, "alpha");
    o.check(std::abs(r.theta.value - std::sqrt(5.0)) < 1e-5, "theta");
    o.check(r.alpha_star.value.text == "5/2", "alpha*");
    o.detail << "deviation " << dev << ", alpha=2, theta=" << r.theta.value << ", alpha*=" << r.alpha_star.value.text;
}

void properties(Outcome &o) {
    // Rank-1 decomposition of every two-local eigenprojector.
    std::size_t labels = 0;
    for (int p : {2, 3, 5}) {
        const PrimeDim d(p);
        double worst = 0;
        for (int x1 = 0; x1 < p; ++x1)
            for (int z1 = 0; z1 < p; ++z1)
                for (int x2 = 0; x2 < p; ++x2)
                    for (int z2 = 0; z2 < p; ++z2) {
                        if ((x1 == 0 && z1 == 0) || (x2 == 0 && z2 == 0)) continue;
                        const SymplecticPauli label({x1, x2}, {z1, z2});
                        for (int k = 0; k < p; ++k) {
                            DenseMatrix sum(p * p);
                            for (const auto &r : rank1_decompose(label, k, d)) sum += r.matrix;
                            worst = std::max(worst, max_abs_diff(sum, eigenprojector(label, k, d).matrix));
                            ++labels;
                        }
                    }
        o.check(worst < 1e-10, "rank-1 decomposition d=" + std::to_string(p));
    }
    // Exact versus dense orthogonality on every pair of the total family.
    std::size_t pairs = 0;
    for (int p : {2, 3}) {
        const auto fam = enumerate_two_qudit(PrimeDim(p), FamilyKind::total);
        std::vector<DenseMatrix> dense;
        for (const auto &s : fam.states) dense.push_back(s.projector());
        bool agree = true;
        for (std::size_t i = 0; i < dense.size(); ++i)
            for (std::size_t j = i + 1; j < dense.size(); ++j, ++pairs)
                agree &= is_orthogonal(fam.states[i], fam.states[j]) ==
                         (std::abs(trace_of_product(dense[i], dense[j])) < 1e-10);
        o.check(agree, "orthogonality d=" + std::to_string(p));
    }
    // Small graphs against brute force.
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_graph(6 + i % 7, 0.2 + 0.15 * (i % 5), 1000 + i);
        const bool ok = independence_number(g).value == oracle::independence_number(g) &&
                        max_clique(g).value == oracle::clique_number(g) &&
                        chromatic_number(g).value == oracle::chromatic_number(g) &&
                        clique_cover(g).value == oracle::clique_cover_number(g);
        o.check(ok, "oracle graph " + std::to_string(i));
    }
    // Theta of odd cycles against the closed form.
    double worst = 0;
    for (int k = 2; k <= 6; ++k) {
        const int n = 2 * k + 1;
        const double c = std::cos(std::numbers::pi / n);
        worst = std::max(worst, std::abs(lovasz_theta(cycle_graph(n)).value - n * c / (1 + c)));
    }
    o.check(worst < 1e-4, "theta of odd cycles");
    o.detail << labels << " projector labels, " << pairs << " pairs, 40 oracle graphs, theta dev " << worst;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria{
        {"family counts", counts},
        {"independence numbers", independence},
        {"clique covers", covers},
        {"SIC dichotomy", sic},
        {"traceless set and Cayley graph", traceless},
        {"trace formula", trace_formula},
        {"CHSH pipeline", chsh},
        {"induced odd cycles", cycles},
        {"Peres-Mermin square", peres_mermin_square},
        {"KCBS and sandwich", kcbs_and_sandwich},
        {"alternate CHSH", alternate},
        {"property suites", properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::printf("criterion %2zu %s  %-32s %6.1fs  %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    seconds_since(t0), o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
