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


// qctx: contextuality invariants of stabilizer orthogonality graphs.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qctx/bell.hpp"
#include "qctx/error.hpp"
#include "qctx/graph.hpp"
#include "qctx/invariants.hpp"
#include "qctx/report.hpp"
#include "qctx/stabilizer.hpp"

namespace {

using nlohmann::json;
using namespace qctx;

constexpr int kMaxFamilyDim = 7;

struct RunConfig {
    std::vector<int> dimensions;
    std::string family = "ent";
    std::string graph = "chsh";
    double budget_seconds = 60;
    double tolerance = 1e-6;
    std::uint64_t seed = 1;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "table";
    std::string out;
    bool hints = true;
    int k_max = 4;
    std::size_t packing_cap = kDefaultPackingVertices;
    std::size_t sdp_cap = kDefaultSdpVertices;
};

/// Flat view of a result for the table and csv formats.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v, int digits = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string render_table(const Table &t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string> &row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(t.header);
    for (const auto &r : t.rows) widen(r);
    std::ostringstream out;
    auto line = [&](const std::vector<std::string> &row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << '\n';
    };
    line(t.header);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto &r : t.rows) line(r);
    return out.str();
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string render_csv(const Table &t) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string> &row) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    };
    line(t.header);
    for (const auto &r : t.rows) line(r);
    return out.str();
}

void emit(const RunConfig &cfg, const json &doc, const Table &table) {
    std::string text;
    if (cfg.format == "json") {
        text = doc.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        text = render_csv(table);
    } else if (cfg.format == "table") {
        text = render_table(table);
    } else {
        throw Error(ErrorCode::ParseError, "format " + cfg.format + " is only valid for export");
    }
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + cfg.out);
    f << text;
}

PrimeDim family_dim(int d) {
    if (d > kMaxFamilyDim) throw Error(ErrorCode::UnsupportedDim, "families are enumerated for d <= 7");
    return PrimeDim(d);
}

int single_dimension(const RunConfig &cfg) {
    if (cfg.dimensions.size() != 1) throw Error(ErrorCode::ParseError, "exactly one --dimension is expected");
    return cfg.dimensions.front();
}

InvariantRequest base_request(const RunConfig &cfg) {
    InvariantRequest q;
    q.budget_seconds = cfg.budget_seconds;
    q.jobs = cfg.jobs;
    q.tolerance = cfg.tolerance;
    q.packing_cap = cfg.packing_cap;
    q.sdp_cap = cfg.sdp_cap;
    return q;
}

std::string flag_text(const std::optional<bool> &f) { return f ? (*f ? "true" : "false") : "unknown"; }
std::string flag_status(const std::optional<bool> &f) { return f ? "exact" : "skipped"; }

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << v;
    return s.str();
}

void report_rows(const InvariantReport &r, Table &t) {
    auto clique_row = [&](const char *name, const CliqueResult &c, SolveStatus s) {
        if (s == SolveStatus::skipped) {
            t.rows.push_back({name, "-", "skipped", ""});
            return;
        }
        std::string v = std::to_string(c.value);
        if (s != SolveStatus::exact) v += " <= . <= " + std::to_string(c.upper_bound);
        t.rows.push_back({name, v, std::string(status_name(s)), ""});
    };
    t.rows.push_back({"vertices", std::to_string(r.n), "exact", ""});
    t.rows.push_back({"edges", std::to_string(r.edges), "exact", ""});
    t.rows.push_back({"regular_degree", r.regular_degree ? std::to_string(*r.regular_degree) : "not regular", "exact", ""});
    clique_row("alpha", r.alpha, r.alpha_status);
    clique_row("omega", r.omega, r.omega_status);
    if (r.chi_status == SolveStatus::skipped) {
        t.rows.push_back({"chi", "-", "skipped", ""});
    } else {
        std::string v = r.chi_status == SolveStatus::exact
                            ? std::to_string(r.chi.value)
                            : std::to_string(r.chi.lower_bound) + " <= . <= " + std::to_string(r.chi.value);
        t.rows.push_back({"chi", v, std::string(status_name(r.chi_status)), r.chi.method});
    }
    if (r.cover_status == SolveStatus::skipped) {
        t.rows.push_back({"clique_cover", "-", "skipped", ""});
    } else {
        std::string v = r.cover_status == SolveStatus::exact
                            ? std::to_string(r.cover.value)
                            : std::to_string(r.cover.lower_bound) + " <= . <= " + std::to_string(r.cover.value);
        t.rows.push_back({"clique_cover", v, std::string(status_name(r.cover_status)), r.cover.method});
    }
    if (r.alpha_star_status == SolveStatus::skipped) {
        t.rows.push_back({"alpha_star", "-", "skipped", ""});
    } else {
        t.rows.push_back({"alpha_star", r.alpha_star.value.text, std::string(status_name(r.alpha_star_status)),
                          fmt(r.alpha_star.value.approx)});
    }
    if (r.theta_status == SolveStatus::skipped) {
        t.rows.push_back({"theta", "-", "skipped", ""});
    } else {
        t.rows.push_back({"theta", fmt(r.theta.value), std::string(status_name(r.theta_status)),
                          "[" + fmt(r.theta.lower) + ", " + fmt(r.theta.upper) + "]"});
    }
    t.rows.push_back({"sic_alpha_below_cover", flag_text(r.alpha_below_cover), flag_status(r.alpha_below_cover), ""});
    t.rows.push_back({"sic_chi_above_dim", flag_text(r.chi_above_dim), flag_status(r.chi_above_dim),
                      r.hilbert_dim ? "D=" + std::to_string(*r.hilbert_dim) : ""});
    t.rows.push_back({"sandwich", flag_text(r.sandwich), flag_status(r.sandwich), ""});
}

// ---- commands ----------------------------------------------------------------

void cmd_counts(const RunConfig &cfg) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "counts";
    doc["rows"] = json::array();
    Table t{{"d", "single", "sep", "ent", "tot", "formula"}, {}};
    const std::vector<int> dims = cfg.dimensions.empty() ? std::vector<int>{2, 3, 5} : cfg.dimensions;
    for (int dv : dims) {
        const PrimeDim d = family_dim(dv);
        json row;
        row["d"] = dv;
        std::vector<std::string> cells{std::to_string(dv)};
        bool ok = true;
        std::size_t sep = 0;
        for (FamilyKind k : {FamilyKind::single, FamilyKind::separable, FamilyKind::entangled}) {
            const std::size_t n = (k == FamilyKind::single ? enumerate_single(d) : enumerate_two_qudit(d, k)).states.size();
            ok &= n == expected_family_size(d, k);
            if (k == FamilyKind::separable) sep = n;
            row[std::string(family_name(k))] = n;
            cells.push_back(std::to_string(n));
            if (k == FamilyKind::entangled) {
                const std::size_t tot = sep + n;
                ok &= tot == expected_family_size(d, FamilyKind::total);
                row["tot"] = tot;
                cells.push_back(std::to_string(tot));
            }
        }
        row["formula_match"] = ok;
        cells.push_back(ok ? "match" : "MISMATCH");
        doc["rows"].push_back(row);
        t.rows.push_back(cells);
    }
    emit(cfg, doc, t);
}

void cmd_invariants(const RunConfig &cfg) {
    const PrimeDim d = family_dim(single_dimension(cfg));
    const FamilyKind kind = parse_family(cfg.family);
    const StateFamily fam = kind == FamilyKind::single ? enumerate_single(d) : enumerate_two_qudit(d, kind);
    const Graph g = orthogonality_graph(fam, cfg.jobs);

    InvariantRequest q = base_request(cfg);
    q.hilbert_dim = kind == FamilyKind::single ? d.value() : d.value() * d.value();
    bool cayley = false;
    if (cfg.hints) {
        if (kind == FamilyKind::entangled && d.value() % 2 == 1) cayley = cayley_matches_entangled(d, g);
        q.hints = family_hints(fam, cayley);
    }
    const std::string id = "gamma_" + std::string(family_name(kind)) + "_d" + std::to_string(d.value());
    const InvariantReport r = compute_invariants(g, id, q);

    json doc = report_json(r);
    doc["command"] = "invariants";
    doc["dimension"] = d.value();
    doc["family"] = family_name(kind);
    doc["hints"] = cfg.hints;
    doc["cayley_edge_identity"] = cayley;
    Table t{{"invariant", "value", "status", "note"}, {}};
    t.rows.push_back({"graph", id, "exact", ""});
    report_rows(r, t);
    emit(cfg, doc, t);
}

void cmd_chsh(const RunConfig &cfg) {
    const PrimeDim d(single_dimension(cfg));
    ContextualityScenario s = chsh_scenario(d);
    const InvariantReport r = evaluate_scenario(s, base_request(cfg));
    const int classical = chsh_classical_bound(d);
    const bool regular = regularity_conjecture_check(s, d);

    OddCycleOptions co;
    co.budget_seconds = cfg.budget_seconds;
    co.seed = cfg.seed;
    const auto cycles = induced_odd_cycles(s.graph, cfg.k_max, co);

    json doc = scenario_json(s);
    doc["command"] = "chsh";
    doc["dimension"] = d.value();
    doc["invariants"] = report_json(r);
    doc["classical_bound"] = classical;
    doc["regularity_degree"] = (2 * d.value() - 1) * (d.value() - 1);
    doc["regularity_holds"] = regular;
    json bell = nullptr;
    if (r.alpha_status == SolveStatus::exact) {
        bell = d.value() * static_cast<int>(r.alpha.value) - d.value() * d.value();
    }
    doc["bell_bound_from_alpha"] = bell;
    doc["lambda_max"] = s.qm_value;
    doc["cycles"] = json::array();
    Table t{{"field", "value", "status", "note"}, {}};
    t.rows.push_back({"d", std::to_string(d.value()), "exact", ""});
    t.rows.push_back({"projectors", std::to_string(s.projectors.size()), "exact", ""});
    t.rows.push_back({"regularity", std::to_string((2 * d.value() - 1) * (d.value() - 1)), "exact",
                      regular ? "holds" : "fails"});
    report_rows(r, t);
    t.rows.push_back({"lambda_max", fmt(s.qm_value), "tolerance", ""});
    t.rows.push_back({"bell_bound", bell.is_null() ? "-" : std::to_string(bell.get<int>()),
                      bell.is_null() ? "skipped" : "exact", "classical " + std::to_string(classical)});
    for (const auto &c : cycles) {
        json e;
        e["k"] = c.k;
        e["length"] = 2 * c.k + 1;
        e["cycle"] = cycle_status_name(c.cycle);
        e["anticycle"] = cycle_status_name(c.anticycle);
        e["cycle_witness"] = c.cycle_witness;
        e["anticycle_witness"] = c.anticycle_witness;
        doc["cycles"].push_back(e);
        t.rows.push_back({"C" + std::to_string(2 * c.k + 1), std::string(cycle_status_name(c.cycle)), "exact",
                          "complement " + std::string(cycle_status_name(c.anticycle))});
    }
    if (d.value() == 2) {
        const auto n5 = count_induced_cycles(s.graph, 5, Deadline::after_seconds(cfg.budget_seconds));
        doc["induced_pentagons"] = n5;
        t.rows.push_back({"induced_pentagons", std::to_string(n5), "exact", ""});
    }
    if (s.graph.size() <= 30) {
        const auto aut = automorphism_count(s.graph);
        doc["automorphism_hint"] = aut ? json(*aut) : json(nullptr);
        t.rows.push_back({"automorphisms", aut ? std::to_string(*aut) : "-", aut ? "exact" : "bound", "hint"});
    } else {
        doc["automorphism_hint"] = nullptr;
        t.rows.push_back({"automorphisms", "-", "skipped", "hint"});
    }
    emit(cfg, doc, t);
}

void cmd_pm(const RunConfig &cfg) {
    const PeresMerminRecord pm = peres_mermin();
    ColoringOptions o;
    o.budget_seconds = cfg.budget_seconds;
    const ColoringResult chi = chromatic_number(pm.graph, o);
    const bool contradiction = pm.consistent_assignments == 0;

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "pm";
    doc["cells"] = pm.cells;
    doc["contexts_commute"] = pm.contexts_commute;
    doc["row_deviation"] = pm.row_deviation;
    doc["column_deviation"] = pm.column_deviation;
    doc["consistent_assignments"] = pm.consistent_assignments;
    doc["assignments_scanned"] = pm.assignments_scanned;
    doc["contradiction"] = contradiction;
    doc["projectors"] = pm.projectors.size();
    doc["bijection"] = pm.bijection;
    doc["isomorphic_to_entangled"] = pm.isomorphic_to_entangled;
    doc["chi"] = {{"value", chi.value}, {"status", status_name(chi.status)}};
    doc["sic_chi_above_dim"] = chi.status == SolveStatus::exact ? json(chi.value > 4) : json(nullptr);

    Table t{{"field", "value", "status", "note"}, {}};
    t.rows.push_back({"contexts_commute", pm.contexts_commute ? "true" : "false", "exact", ""});
    t.rows.push_back({"row_deviation", sci(pm.row_deviation), "tolerance", "rows multiply to +I"});
    t.rows.push_back({"column_deviation", sci(pm.column_deviation), "tolerance", "columns multiply to -I"});
    t.rows.push_back({"consistent_assignments",
                      std::to_string(pm.consistent_assignments) + "/" + std::to_string(pm.assignments_scanned),
                      "exact", contradiction ? "contradiction" : ""});
    t.rows.push_back({"projectors", std::to_string(pm.projectors.size()), "exact", ""});
    t.rows.push_back({"isomorphic_to_entangled", pm.isomorphic_to_entangled ? "true" : "false", "exact",
                      pm.bijection.empty() ? "" : "explicit bijection"});
    t.rows.push_back({"chi", std::to_string(chi.value), std::string(status_name(chi.status)), "D=4"});
    emit(cfg, doc, t);
}

void scenario_command(const RunConfig &cfg, ContextualityScenario s, const char *command, json extra, Table t) {
    const InvariantReport r = evaluate_scenario(s, base_request(cfg));
    json doc = scenario_json(s);
    doc["command"] = command;
    doc["invariants"] = report_json(r);
    doc["lambda_max"] = s.qm_value;
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    report_rows(r, t);
    t.rows.push_back({"lambda_max", fmt(s.qm_value), "tolerance", ""});
    emit(cfg, doc, t);
}

void cmd_kcbs(const RunConfig &cfg) {
    Table t{{"field", "value", "status", "note"}, {}};
    scenario_command(cfg, kcbs_scenario(), "kcbs", json::object(), t);
}

void cmd_alt_chsh(const RunConfig &cfg) {
    ContextualityScenario s = alternate_chsh_scenario();
    DenseMatrix lhs = s.sigma * Complex(4) - DenseMatrix::identity(4) * Complex(6);
    const double deviation = max_abs_diff(lhs, chsh_operator(PrimeDim(2)).matrix);
    const bool pan = find_isomorphism(s.graph, complement(pan_graph(5))).has_value();
    json extra;
    extra["identity_deviation"] = deviation;
    extra["complement_of_pan"] = pan;
    Table t{{"field", "value", "status", "note"}, {}};
    t.rows.push_back({"identity_deviation", sci(deviation), "tolerance", "4 sigma - 6 I = B"});
    t.rows.push_back({"complement_of_pan", pan ? "true" : "false", "exact", ""});
    scenario_command(cfg, std::move(s), "alt-chsh", extra, t);
}

void cmd_export(const RunConfig &cfg) {
    if (cfg.format != "dimacs" && cfg.format != "json") {
        throw Error(ErrorCode::ParseError, "export writes dimacs or json");
    }
    Graph g;
    json doc;
    std::string comment;
    const std::string &name = cfg.graph;
    if (name == "chsh" || name == "pm" || name == "kcbs" || name == "alt-chsh") {
        ContextualityScenario s;
        if (name == "chsh") {
            s = chsh_scenario(PrimeDim(single_dimension(cfg)));
        } else if (name == "kcbs") {
            s = kcbs_scenario();
        } else if (name == "alt-chsh") {
            s = alternate_chsh_scenario();
        } else {
            const PeresMerminRecord pm = peres_mermin();
            s.name = "peres-mermin";
            s.hilbert_dim = 4;
            s.projectors = pm.projectors;
            s.graph = pm.graph;
        }
        g = s.graph;
        doc = scenario_json(s);
        comment = s.name;
    } else {
        const PrimeDim d = family_dim(single_dimension(cfg));
        const FamilyKind kind = parse_family(name);
        const StateFamily fam = kind == FamilyKind::single ? enumerate_single(d) : enumerate_two_qudit(d, kind);
        g = orthogonality_graph(fam, cfg.jobs);
        comment = "gamma_" + std::string(family_name(kind)) + " d=" + std::to_string(d.value());
        doc["schema_version"] = kSchemaVersion;
        doc["name"] = comment;
        doc["graph"] = json::parse(graph_to_json(g));
        doc["states"] = json::array();
        for (const auto &st : fam.states) doc["states"].push_back(json::parse(state_to_json(st, kind)));
    }
    std::ostringstream text;
    if (cfg.format == "dimacs") {
        write_dimacs(text, g, comment);
    } else {
        text << doc.dump(2) << '\n';
    }
    if (cfg.out.empty()) {
        std::cout << text.str();
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + cfg.out);
    f << text.str();
}

void add_common(CLI::App *sub, RunConfig &cfg, bool with_dimension) {
    if (with_dimension) sub->add_option("-d,--dimension", cfg.dimensions, "Prime local dimension")->check(CLI::PositiveNumber);
    sub->add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock budget per invariant")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tolerance", cfg.tolerance, "Theta bracket tolerance")->check(CLI::Range(1e-15, 0.1));
    sub->add_option("--seed", cfg.seed, "Seed for randomized cycle search");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv", "dimacs"}));
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Contextuality invariants of stabilizer orthogonality graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *counts = app.add_subcommand("counts", "Sizes of the stabilizer state families");
    add_common(counts, cfg, true);

    auto *inv = app.add_subcommand("invariants", "Graph invariants of one state family");
    add_common(inv, cfg, true);
    inv->add_option("--family", cfg.family, "single, sep, ent or tot")
        ->check(CLI::IsMember({"single", "sep", "ent", "tot", "separable", "entangled", "total"}));
    inv->add_flag("!--no-hints", cfg.hints, "Ignore structural certificates");
    inv->add_option("--packing-cap", cfg.packing_cap, "Largest graph for the fractional packing LP");
    inv->add_option("--sdp-cap", cfg.sdp_cap, "Largest graph for the theta SDP");

    auto *chsh = app.add_subcommand("chsh", "Qudit CHSH orthogonality graph");
    add_common(chsh, cfg, true);
    chsh->add_option("--k-max", cfg.k_max, "Largest k for induced C_{2k+1} search")->check(CLI::Range(2, 20));
    chsh->add_option("--packing-cap", cfg.packing_cap, "Largest graph for the fractional packing LP");
    chsh->add_option("--sdp-cap", cfg.sdp_cap, "Largest graph for the theta SDP");

    auto *pm = app.add_subcommand("pm", "Peres-Mermin square");
    add_common(pm, cfg, false);
    auto *kcbs = app.add_subcommand("kcbs", "KCBS pentagon");
    add_common(kcbs, cfg, false);
    auto *alt = app.add_subcommand("alt-chsh", "Six-projector CHSH realization");
    add_common(alt, cfg, false);

    auto *exp = app.add_subcommand("export", "Write a graph as DIMACS or JSON");
    add_common(exp, cfg, true);
    exp->add_option("--graph", cfg.graph, "single, sep, ent, tot, chsh, pm, kcbs or alt-chsh")
        ->check(CLI::IsMember({"single", "sep", "ent", "tot", "chsh", "pm", "kcbs", "alt-chsh"}));
    exp->add_option("--family", cfg.graph, "Alias for --graph with a state family");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*counts) cmd_counts(cfg);
        if (*inv) cmd_invariants(cfg);
        if (*chsh) cmd_chsh(cfg);
        if (*pm) cmd_pm(cfg);
        if (*kcbs) cmd_kcbs(cfg);
        if (*alt) cmd_alt_chsh(cfg);
        if (*exp) {
            if (cfg.format == "table") cfg.format = "dimacs";
            cmd_export(cfg);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
