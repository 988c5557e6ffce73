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

#include "qctx/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qctx/error.hpp"

namespace qctx {

void Graph::add_edge(std::size_t i, std::size_t j) {
    if (i >= size() || j >= size()) throw Error(ErrorCode::ShapeMismatch, "edge endpoint out of range");
    if (i == j) throw Error(ErrorCode::ShapeMismatch, "self-loops are not allowed");
    rows_[i].set(j);
    rows_[j].set(i);
}

std::size_t Graph::num_edges() const noexcept {
    std::size_t twice = 0;
    for (const auto &r : rows_) twice += r.count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = rows_[i].next(i + 1); j < size(); j = rows_[i].next(j + 1)) {
            out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (rows_.empty()) return 0;
    const std::size_t deg = degree(0);
    for (std::size_t i = 1; i < size(); ++i)
        if (degree(i) != deg) return std::nullopt;
    return deg;
}

namespace {

unsigned resolve_jobs(unsigned jobs) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    return jobs;
}

// Runs body(i) for i in [0, n) over `jobs` threads with a strided split.
template <typename Body>
void parallel_for(std::size_t n, unsigned jobs, Body body) {
    jobs = resolve_jobs(jobs);
    if (jobs == 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += jobs) body(i);
        });
    }
    for (auto &t : workers) t.join();
}

}  // namespace

Graph orthogonality_graph(const StateFamily &family, unsigned jobs) {
    const auto &states = family.states;
    const std::size_t n = states.size();
    Graph g(n);
    if (n == 0) return g;
    for (std::size_t i = 0; i < n; ++i) g.set_label(i, states[i].label());

    // lookup[t][v] = phase of vector v in state t, plus one; 0 when absent.
    std::size_t space = 1;
    for (int i = 0; i < 2 * states.front().num_qudits(); ++i) space *= family.d.value();
    std::vector<std::uint8_t> lookup(n * space, 0);
    for (std::size_t t = 0; t < n; ++t) {
        for (const auto &e : states[t].elements()) lookup[t * space + e.vector] = static_cast<std::uint8_t>(e.phase + 1);
    }

    std::vector<Bitset> rows(n, Bitset(n));
    parallel_for(n, jobs, [&](std::size_t s) {
        const auto &elems = states[s].elements();
        for (std::size_t t = 0; t < n; ++t) {
            if (t == s) continue;
            const std::uint8_t *table = &lookup[t * space];
            for (const auto &e : elems) {
                const std::uint8_t ph = table[e.vector];
                if (ph && ph - 1 != e.phase) {
                    rows[s].set(t);
                    break;
                }
            }
        }
    });
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = rows[s].next(s + 1); t < n; t = rows[s].next(t + 1)) g.add_edge(s, t);
    return g;
}

Graph orthogonality_graph(std::span<const Projector> projectors, double tol) {
    Graph g(projectors.size());
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        g.set_label(i, projectors[i].label);
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            if (std::abs(trace_of_product(projectors[i].matrix, projectors[j].matrix)) < tol) g.add_edge(i, j);
        }
    }
    return g;
}

Graph cayley_graph(std::span<const CliffordElement> elements, std::span<const CliffordElement> connection,
                   PrimeDim d) {
    std::size_t key_space = 1;
    for (int i = 0; i < 6; ++i) key_space *= d.value();
    std::vector<char> in_t(key_space, 0);
    for (const auto &c : connection) {
        if (c == CliffordElement{}) throw Error(ErrorCode::BadConnectionSet, "identity in connection set");
        in_t[clifford_key(c, d)] = 1;
    }
    for (const auto &c : connection) {
        if (!in_t[clifford_key(inverse(c, d), d)]) {
            throw Error(ErrorCode::BadConnectionSet, "connection set not closed under inversion");
        }
    }
    Graph g(elements.size());
    std::vector<CliffordElement> inverses;
    for (const auto &e : elements) inverses.push_back(inverse(e, d));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        g.set_label(i, elements[i].label());
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (in_t[clifford_key(compose(inverses[i], elements[j], d), d)]) g.add_edge(i, j);
        }
    }
    return g;
}

Graph or_product(const Graph &g, const Graph &h) {
    const std::size_t m = h.size();
    Graph out(g.size() * m);
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const std::size_t u = a * m + b;
            out.set_label(u, g.label(a) + "x" + h.label(b));
            for (std::size_t c = a; c < g.size(); ++c) {
                for (std::size_t e = (c == a ? b + 1 : 0); e < m; ++e) {
                    if (g.adjacent(a, c) || h.adjacent(b, e)) out.add_edge(u, c * m + e);
                }
            }
        }
    }
    return out;
}

Graph complement(const Graph &g) {
    Graph out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        out.set_label(i, g.label(i));
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!g.adjacent(i, j)) out.add_edge(i, j);
    }
    return out;
}

Graph induced_subgraph(const Graph &g, std::span<const int> vertices) {
    Graph out(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        out.set_label(a, g.label(vertices[a]));
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (g.adjacent(vertices[a], vertices[b])) out.add_edge(a, b);
    }
    return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::size_t n = 0;
    for (const auto &p : parts) n += p.size();
    Graph out(n);
    std::size_t offset = 0;
    for (const auto &p : parts) {
        for (std::size_t i = 0; i < p.size(); ++i) out.set_label(offset + i, p.label(i));
        for (auto [i, j] : p.edges()) out.add_edge(offset + i, offset + j);
        offset += p.size();
    }
    return out;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph disjoint_complete(std::size_t copies, std::size_t n) {
    std::vector<Graph> parts(copies, complete_graph(n));
    return disjoint_union(parts);
}

Graph cycle_graph(std::size_t n) {
    Graph g(n);
    if (n < 3) throw Error(ErrorCode::ShapeMismatch, "a cycle needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph pan_graph(std::size_t n) {
    const Graph c = cycle_graph(n);
    Graph g(n + 1);
    for (auto [i, j] : c.edges()) g.add_edge(i, j);
    g.add_edge(0, n);
    return g;
}

bool is_isomorphism(const Graph &g, const Graph &h, std::span<const int> map) {
    if (g.size() != h.size() || map.size() != g.size()) return false;
    std::vector<char> used(h.size(), 0);
    for (int v : map) {
        if (v < 0 || static_cast<std::size_t>(v) >= h.size() || used[v]) return false;
        used[v] = 1;
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.adjacent(i, j) != h.adjacent(map[i], map[j])) return false;
    return true;
}

namespace {

// Iterated degree refinement: a vertex's next colour ranks the pair (own colour,
// sorted neighbour colours). Stops once the number of classes stops growing.
std::vector<int> refine_colours(const Graph &g) {
    const std::size_t n = g.size();
    std::vector<int> colour(n);
    for (std::size_t i = 0; i < n; ++i) colour[i] = static_cast<int>(g.degree(i));
    std::size_t classes = 0;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> neigh;
            for (int j : g.row(i).members()) neigh.push_back(colour[j]);
            std::sort(neigh.begin(), neigh.end());
            sig[i].push_back(colour[i]);
            sig[i].insert(sig[i].end(), neigh.begin(), neigh.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t i = 0; i < n; ++i)
            colour[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
        if (sorted.size() == classes) return colour;
        classes = sorted.size();
    }
}

struct IsoSearch {
    const Graph &g;
    const Graph &h;
    std::vector<int> g_col, h_col;  // joint refinement colours
    std::vector<int> order;                      // g vertices in search order
    std::vector<int> map, used;
    std::size_t limit = 1;
    std::size_t found = 0;
    std::vector<int> first;

    void run(std::size_t depth) {
        if (found >= limit) return;
        if (depth == order.size()) {
            if (found++ == 0) first = map;
            return;
        }
        const int v = order[depth];
        for (std::size_t c = 0; c < h.size(); ++c) {
            if (used[c] || g_col[v] != h_col[c]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const int u = order[k];
                ok = g.adjacent(v, u) == h.adjacent(c, map[u]);
            }
            if (!ok) continue;
            map[v] = static_cast<int>(c);
            used[c] = 1;
            run(depth + 1);
            used[c] = 0;
            map[v] = -1;
            if (found >= limit) return;
        }
    }
};

// Refinement runs on the disjoint union so colour names agree across the two graphs.
std::pair<std::vector<int>, std::vector<int>> joint_colours(const Graph &g, const Graph &h) {
    const std::vector<Graph> parts{g, h};
    const std::vector<int> colour = refine_colours(disjoint_union(parts));
    return {std::vector<int>(colour.begin(), colour.begin() + g.size()),
            std::vector<int>(colour.begin() + g.size(), colour.end())};
}

std::vector<int> search_order(const Graph &g) {
    // Greedy: next vertex has the most neighbours already placed, ties by degree then index.
    const std::size_t n = g.size();
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    std::vector<int> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        int best = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best < 0 || links[v] > links[best] ||
                (links[v] == links[best] && g.degree(v) > g.degree(best))) {
                best = static_cast<int>(v);
            }
        }
        placed[best] = 1;
        order.push_back(best);
        for (int u : g.row(best).members()) ++links[u];
    }
    return order;
}

std::size_t run_search(const Graph &g, const Graph &h, std::size_t limit, std::vector<int> *first) {
    if (g.size() > kMaxIsomorphismVertices || h.size() > kMaxIsomorphismVertices) {
        throw Error(ErrorCode::DimensionOverflow, "isomorphism search is limited to small graphs");
    }
    if (g.size() != h.size() || g.num_edges() != h.num_edges()) return 0;
    auto [gs, hs] = joint_colours(g, h);
    std::vector<int> a = gs, b = hs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return 0;
    IsoSearch s{g, h, std::move(gs), std::move(hs), search_order(g), std::vector<int>(g.size(), -1),
                std::vector<int>(h.size(), 0), limit, 0, {}};
    s.run(0);
    if (first && s.found) *first = s.first;
    return s.found;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph &g, const Graph &h) {
    std::vector<int> map;
    if (run_search(g, h, 1, &map) == 0) return std::nullopt;
    return map;
}

std::optional<std::size_t> automorphism_count(const Graph &g, std::size_t limit) {
    if (g.size() > kMaxIsomorphismVertices) return std::nullopt;
    const std::size_t count = run_search(g, g, limit + 1, nullptr);
    if (count > limit) return std::nullopt;
    return count;
}

void write_dimacs(std::ostream &out, const Graph &g, std::string_view comment) {
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << g.size() << " " << g.num_edges() << "\n";
    for (auto [i, j] : g.edges()) out << "e " << i + 1 << " " << j + 1 << "\n";
}

Graph read_dimacs(std::istream &in) {
    std::string line;
    std::optional<Graph> g;
    std::size_t declared = 0, seen = 0;
    std::size_t line_no = 0;
    auto fail = [&](const std::string &why) {
        throw Error(ErrorCode::ParseError, "DIMACS line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            std::size_t n = 0;
            if (g || !(ls >> fmt >> n >> declared) || (fmt != "edge" && fmt != "col")) fail("bad problem line");
            g.emplace(n);
        } else if (tag == "e") {
            long long i = 0, j = 0;
            if (!g || !(ls >> i >> j)) fail("bad edge line");
            if (i < 1 || j < 1 || static_cast<std::size_t>(i) > g->size() || static_cast<std::size_t>(j) > g->size() ||
                i == j) {
                fail("edge endpoint out of range");
            }
            if (!g->adjacent(i - 1, j - 1)) g->add_edge(i - 1, j - 1);
            ++seen;
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    if (!g) throw Error(ErrorCode::ParseError, "DIMACS input has no problem line");
    if (seen != declared) throw Error(ErrorCode::ParseError, "DIMACS edge count does not match header");
    return std::move(*g);
}

std::string graph_to_json(const Graph &g) {
    nlohmann::json j;
    j["n"] = g.size();
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
    j["labels"] = g.labels();
    return j.dump();
}

Graph graph_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Graph g(j.at("n").get<std::size_t>());
        for (const auto &e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        if (j.contains("labels")) {
            const auto labels = j.at("labels").get<std::vector<std::string>>();
            if (labels.size() != g.size()) throw Error(ErrorCode::ParseError, "label count does not match n");
            for (std::size_t i = 0; i < labels.size(); ++i) g.set_label(i, labels[i]);
        }
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("graph JSON: ") + e.what());
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, std::string("graph JSON: ") + e.what());
    }
}

std::string state_to_json(const StabilizerState &s, FamilyKind kind) {
    nlohmann::json j;
    j["kind"] = family_name(kind);
    j["d"] = s.dim().value();
    j["label"] = s.label();
    j["generators"] = nlohmann::json::array();
    for (const auto &g : s.generators()) j["generators"].push_back({{"x", g.x}, {"z", g.z}, {"phase", g.phase}});
    return j.dump();
}

}  // namespace qctx
