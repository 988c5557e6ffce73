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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qctx/bitset.hpp"
#include "qctx/clifford.hpp"
#include "qctx/pauli.hpp"
#include "qctx/stabilizer.hpp"

namespace qctx {

/// Undirected simple graph with one packed adjacency row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : rows_(n, Bitset(n)), labels_(n) {}

    std::size_t size() const noexcept { return rows_.size(); }

    /// Throws ShapeMismatch on a self-loop or an out-of-range vertex.
    void add_edge(std::size_t i, std::size_t j);
    bool adjacent(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
    const Bitset &row(std::size_t i) const noexcept { return rows_[i]; }

    std::size_t degree(std::size_t i) const noexcept { return rows_[i].count(); }
    std::size_t num_edges() const noexcept;
    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    /// The common degree, or nullopt when the graph is not regular.
    std::optional<std::size_t> regular_degree() const;

    const std::string &label(std::size_t i) const noexcept { return labels_[i]; }
    void set_label(std::size_t i, std::string label) { labels_[i] = std::move(label); }
    const std::vector<std::string> &labels() const noexcept { return labels_; }

    /// Adjacency equality; labels are ignored.
    friend bool operator==(const Graph &a, const Graph &b) { return a.rows_ == b.rows_; }

private:
    std::vector<Bitset> rows_;
    std::vector<std::string> labels_;
};

/// Vertex per state, edge iff is_orthogonal. Rows are built in parallel over
/// `jobs` workers (0 = hardware concurrency); the result does not depend on it.
Graph orthogonality_graph(const StateFamily &family, unsigned jobs = 1);

/// Vertex per projector, edge iff |Tr(P Q)| < tol.
Graph orthogonality_graph(std::span<const Projector> projectors, double tol = 1e-10);

/// Cayley graph on `elements` with g ~ h iff g^{-1} h in `connection`.
/// Throws BadConnectionSet if the identity lies in the connection set or the
/// set is not closed under inversion.
Graph cayley_graph(std::span<const CliffordElement> elements, std::span<const CliffordElement> connection,
                   PrimeDim d);

/// (g, h) ~ (g', h') iff g ~ g' or h ~ h'. Vertex (i, j) has index i * |h| + j.
Graph or_product(const Graph &g, const Graph &h);
Graph complement(const Graph &g);
Graph induced_subgraph(const Graph &g, std::span<const int> vertices);
Graph disjoint_union(std::span<const Graph> parts);
Graph complete_graph(std::size_t n);
/// mK_n
Graph disjoint_complete(std::size_t copies, std::size_t n);
Graph cycle_graph(std::size_t n);
/// The n-cycle with one pendant vertex (index n) attached to vertex 0.
Graph pan_graph(std::size_t n);

/// True when `map` is a bijection V(g) -> V(h) preserving adjacency both ways.
bool is_isomorphism(const Graph &g, const Graph &h, std::span<const int> map);

/// Exact isomorphism search (degree refinement plus backtracking); the first
/// bijection found in lowest-index order. Throws DimensionOverflow above
/// kMaxIsomorphismVertices.
inline constexpr std::size_t kMaxIsomorphismVertices = 30;
std::optional<std::vector<int>> find_isomorphism(const Graph &g, const Graph &h);

/// Number of automorphisms, counted by the same search; nullopt when the count
/// exceeds `limit` or the graph is too large.
std::optional<std::size_t> automorphism_count(const Graph &g, std::size_t limit = 1'000'000);

/// DIMACS ASCII: "p edge n m" then "e i j" lines, 1-indexed; comment lines "c".
void write_dimacs(std::ostream &out, const Graph &g, std::string_view comment = {});
/// Throws ParseError on malformed input.
Graph read_dimacs(std::istream &in);

/// {"n": .., "edges": [[i, j], ...], "labels": [...]}, 0-indexed.
std::string graph_to_json(const Graph &g);
Graph graph_from_json(std::string_view text);

/// {"kind", "d", "label", "generators": [{"x", "z", "phase"}]}
std::string state_to_json(const StabilizerState &s, FamilyKind kind);

}  // namespace qctx
