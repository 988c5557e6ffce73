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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qctx/graph.hpp"

namespace qctx {

/// How a reported number was obtained.
///   exact:     proven value (search completed or matching certificates)
///   tolerance: numerical value with a certified bracket narrower than the tolerance
///   bound:     only a bracket is known (budget ran out or bounds do not meet)
///   skipped:   not attempted (size cap or caller choice)
enum class SolveStatus { exact, tolerance, bound, skipped };
std::string_view status_name(SolveStatus s);

/// Wall-clock deadline shared by the search routines.
class Deadline {
public:
    static Deadline after_seconds(double seconds);
    static Deadline never() { return Deadline(); }
    bool expired() const;

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

// ---- cliques -------------------------------------------------------------

struct CliqueOptions {
    double budget_seconds = 60;
    unsigned jobs = 1;
    /// Optional starting incumbent; must be a clique (InvalidHint otherwise).
    std::vector<int> initial;
    /// A proven upper bound; the search stops as soon as the incumbent reaches it.
    std::optional<std::size_t> known_upper;
};

struct CliqueResult {
    std::size_t value = 0;        // size of the witness
    std::size_t upper_bound = 0;  // equals value when exact
    SolveStatus status = SolveStatus::exact;
    std::vector<int> witness;     // sorted
    std::uint64_t nodes = 0;
};

/// Branch and bound with greedy colouring bounds over bitset candidate sets.
/// The witness does not depend on `jobs` or timing.
CliqueResult max_clique(const Graph &g, const CliqueOptions &options = {});
/// max_clique on the complement.
CliqueResult independence_number(const Graph &g, const CliqueOptions &options = {});

/// All maximal cliques (pivoting Bron-Kerbosch), each sorted, in discovery
/// order. Throws BudgetExceeded past `max_cliques` or the deadline.
std::vector<std::vector<int>> maximal_cliques(const Graph &g, std::size_t max_cliques = 200000,
                                              Deadline deadline = Deadline::never());

/// Smallest-last (degeneracy) order: the vertex of minimum degree, removed
/// first, is placed last.
std::vector<int> smallest_last_order(const Graph &g);

// ---- colourings and covers -----------------------------------------------

struct ColoringResult {
    std::size_t value = 0;        // colours used by `coloring`
    std::size_t lower_bound = 0;
    SolveStatus status = SolveStatus::exact;
    std::vector<int> coloring;    // colour per vertex, 0-based
    std::string method;           // "search", "hint", "normal-cayley", "greedy"
};

/// Largest graph handed to the exact colouring search.
inline constexpr std::size_t kExactColoringVertices = 64;

struct ColoringOptions {
    double budget_seconds = 60;
    /// Lower bound known by the caller (typically an exact omega).
    std::size_t lower_bound = 0;
    /// A candidate colouring; verified, InvalidHint when improper.
    std::vector<int> hint;
    /// Normal Cayley route: when set together with exact alpha and omega such
    /// that alpha * omega == n, chi = omega.
    bool normal_cayley = false;
    std::optional<std::size_t> exact_alpha, exact_omega;
};

/// Exact DSATUR branch and bound for n <= kExactColoringVertices, otherwise a
/// bracket [lower, greedy] unless a hint or the normal Cayley route closes it.
ColoringResult chromatic_number(const Graph &g, const ColoringOptions &options = {});

struct CoverResult {
    std::size_t value = 0;  // cliques in `cover`
    std::size_t lower_bound = 0;
    SolveStatus status = SolveStatus::exact;
    std::vector<std::vector<int>> cover;
    std::string method;  // "hint", "search", "greedy"
};

struct CoverOptions {
    double budget_seconds = 60;
    /// Structural partition into cliques; InvalidHint unless it is one.
    std::vector<std::vector<int>> hint;
    /// Lower bound known by the caller, e.g. an independent set size.
    std::size_t lower_bound = 0;
};

/// Clique cover number. Lower bound is max(options.lower_bound, ceil(n / omega))
/// whenever omega is cheap to get exactly; status exact when bounds meet.
CoverResult clique_cover(const Graph &g, const CoverOptions &options = {});

// ---- fractional packing ---------------------------------------------------

struct Rational {
    std::string text;  // "p/q" or "p"
    double approx = 0;
};

struct PackingResult {
    Rational value;
    SolveStatus status = SolveStatus::exact;
    std::vector<Rational> weights;       // optimal x per vertex
    std::size_t num_maximal_cliques = 0;
};

inline constexpr std::size_t kDefaultPackingVertices = 200;

/// alpha*: max sum x_v with x(Q) <= 1 over every maximal clique Q, solved in
/// exact rationals and certified by a matching dual fractional clique cover.
/// Throws BudgetExceeded above `max_vertices` or when cliques are too many.
PackingResult fractional_packing(const Graph &g, std::size_t max_vertices = kDefaultPackingVertices,
                                 double budget_seconds = 60);

// ---- Lovasz theta ----------------------------------------------------------

struct ThetaResult {
    double value = 0;        // midpoint of the bracket
    double lower = 0;        // objective of an exactly feasible primal matrix
    double upper = 0;        // lambda_max of a dual matrix
    SolveStatus status = SolveStatus::tolerance;
    int iterations = 0;
    double gap() const { return upper - lower; }
};

inline constexpr std::size_t kDefaultSdpVertices = 200;

struct ThetaOptions {
    double tolerance = 1e-6;
    double budget_seconds = 60;
    int max_iterations = 20000;
    std::size_t max_vertices = kDefaultSdpVertices;
};

/// Theta via ADMM on max <J, X> s.t. Tr X = 1, X_ij = 0 on edges, X psd.
/// Throws BudgetExceeded above options.max_vertices. When the bracket does
/// not close within the iteration or time budget the result has status bound
/// (the NoConvergence case) and still carries a valid bracket.
ThetaResult lovasz_theta(const Graph &g, const ThetaOptions &options = {});

// ---- induced odd cycles ---------------------------------------------------

enum class CycleStatus { found, absent, not_found };  // absent = exhaustive search completed
std::string_view cycle_status_name(CycleStatus s);

struct OddCycleEntry {
    int k = 0;  // cycle length 2k + 1
    CycleStatus cycle = CycleStatus::not_found;
    CycleStatus anticycle = CycleStatus::not_found;  // induced complement of C_{2k+1}
    std::vector<int> cycle_witness;                  // in cyclic order
    std::vector<int> anticycle_witness;              // cyclic order of the complement's cycle
};

struct OddCycleOptions {
    double budget_seconds = 60;
    std::uint64_t seed = 1;
    /// Exhaustive DFS is attempted for graphs up to this many vertices; above it
    /// only randomized induced-path growth runs.
    std::size_t exhaustive_vertices = 64;
};

std::vector<OddCycleEntry> induced_odd_cycles(const Graph &g, int k_max, const OddCycleOptions &options = {});

/// Number of distinct induced cycles of the given length (exhaustive).
std::uint64_t count_induced_cycles(const Graph &g, std::size_t length, Deadline deadline = Deadline::never());

// ---- independent checkers --------------------------------------------------

bool is_clique(const Graph &g, std::span<const int> vertices);
bool is_independent_set(const Graph &g, std::span<const int> vertices);
bool is_proper_coloring(const Graph &g, std::span<const int> colours);
bool is_clique_cover(const Graph &g, const std::vector<std::vector<int>> &cover);
bool is_induced_cycle(const Graph &g, std::span<const int> cyclic_order);

}  // namespace qctx
