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

#include <algorithm>

#include "qctx/error.hpp"
#include "qctx/invariants.hpp"

namespace qctx {

bool is_proper_coloring(const Graph &g, std::span<const int> colours) {
    if (colours.size() != g.size()) return false;
    for (int c : colours)
        if (c < 0) return false;
    for (auto [i, j] : g.edges())
        if (colours[i] == colours[j]) return false;
    return true;
}

bool is_clique_cover(const Graph &g, const std::vector<std::vector<int>> &cover) {
    std::vector<char> covered(g.size(), 0);
    for (const auto &q : cover) {
        if (q.empty() || !is_clique(g, q)) return false;
        for (int v : q) covered[v] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

std::size_t colours_used(std::span<const int> colours) {
    int top = -1;
    for (int c : colours) top = std::max(top, c);
    return static_cast<std::size_t>(top + 1);
}

// DSATUR: next vertex has the most distinct neighbour colours, then the most
// uncoloured neighbours, then the lowest index.
class Dsatur {
public:
    explicit Dsatur(const Graph &g) : g_(g), n_(g.size()), colour_(n_, -1), seen_(n_, std::vector<int>(n_ + 1, 0)),
                                      saturation_(n_, 0) {}

    std::vector<int> greedy() {
        for (std::size_t step = 0; step < n_; ++step) {
            const int v = pick();
            int c = 0;
            while (seen_[v][c]) ++c;
            assign(v, c);
        }
        return colour_;
    }

    // Exact search; returns false on timeout (best holds the best colouring found).
    bool exact(std::size_t lower, Deadline deadline, std::vector<int> &best) {
        best = Dsatur(g_).greedy();
        best_count_ = colours_used(best);
        lower_ = lower;
        deadline_ = deadline;
        best_ = &best;
        if (best_count_ > lower_) search(0, 0);
        return !timed_out_;
    }

private:
    int pick() const {
        int best = -1;
        std::size_t best_uncoloured = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            std::size_t unc = 0;
            for (int u : g_.row(v).members()) unc += colour_[u] < 0;
            if (best < 0 || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && unc > best_uncoloured)) {
                best = static_cast<int>(v);
                best_uncoloured = unc;
            }
        }
        return best;
    }

    void assign(int v, int c) {
        colour_[v] = c;
        for (int u : g_.row(v).members())
            if (seen_[u][c]++ == 0) ++saturation_[u];
    }

    void unassign(int v) {
        const int c = colour_[v];
        colour_[v] = -1;
        for (int u : g_.row(v).members())
            if (--seen_[u][c] == 0) --saturation_[u];
    }

    void search(std::size_t placed, std::size_t used) {
        if (timed_out_ || best_count_ <= lower_) return;
        if ((++nodes_ & 1023u) == 0 && deadline_.expired()) {
            timed_out_ = true;
            return;
        }
        if (placed == n_) {
            *best_ = colour_;
            best_count_ = used;
            return;
        }
        const int v = pick();
        for (std::size_t c = 0; c <= used && c + 1 < best_count_; ++c) {
            if (seen_[v][c]) continue;
            assign(v, static_cast<int>(c));
            search(placed + 1, std::max(used, c + 1));
            unassign(v);
            if (timed_out_ || best_count_ <= lower_) return;
        }
    }

    const Graph &g_;
    std::size_t n_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> seen_;  // seen_[v][c]: neighbours of v holding colour c
    std::vector<std::size_t> saturation_;
    std::size_t best_count_ = 0, lower_ = 0;
    std::vector<int> *best_ = nullptr;
    Deadline deadline_;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
};

// First-fit over colour classes held as bitsets, in smallest-last order.
std::vector<int> sequential_coloring(const Graph &g) {
    std::vector<Bitset> classes;
    std::vector<int> colour(g.size(), -1);
    for (int v : smallest_last_order(g)) {
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            Bitset t = classes[c];
            t &= g.row(v);
            if (!t.any()) break;
        }
        if (c == classes.size()) classes.emplace_back(g.size());
        classes[c].set(v);
        colour[v] = static_cast<int>(c);
    }
    return colour;
}

std::size_t exact_omega_or_zero(const Graph &g, double budget_seconds) {
    CliqueOptions o;
    o.budget_seconds = budget_seconds;
    const CliqueResult r = max_clique(g, o);
    return r.status == SolveStatus::exact ? r.value : 0;
}

}  // namespace

ColoringResult chromatic_number(const Graph &g, const ColoringOptions &options) {
    ColoringResult r;
    const std::size_t n = g.size();
    if (n == 0) return r;
    r.lower_bound = std::max<std::size_t>(options.lower_bound, 1);
    if (!options.hint.empty() && !is_proper_coloring(g, options.hint)) {
        throw Error(ErrorCode::InvalidHint, "colouring hint is not proper");
    }
    if (options.normal_cayley && options.exact_alpha && options.exact_omega &&
        *options.exact_alpha * *options.exact_omega == n) {
        r.value = *options.exact_omega;
        r.lower_bound = r.value;
        r.status = SolveStatus::exact;
        r.method = "normal-cayley";
        if (!options.hint.empty() && colours_used(options.hint) == r.value) r.coloring = options.hint;
        return r;
    }
    if (options.exact_omega) r.lower_bound = std::max(r.lower_bound, *options.exact_omega);
    if (!options.exact_omega) r.lower_bound = std::max(r.lower_bound, exact_omega_or_zero(g, options.budget_seconds / 2));

    if (!options.hint.empty()) {
        r.coloring = options.hint;
        r.value = colours_used(options.hint);
        r.method = "hint";
    }
    if (n <= kExactColoringVertices && (r.coloring.empty() || r.value > r.lower_bound)) {
        std::vector<int> best;
        const bool complete = Dsatur(g).exact(r.lower_bound, Deadline::after_seconds(options.budget_seconds), best);
        if (r.coloring.empty() || colours_used(best) < r.value) {
            r.coloring = best;
            r.value = colours_used(best);
            r.method = "search";
        }
        if (complete) r.lower_bound = r.value;
    } else if (r.coloring.empty()) {
        r.coloring = sequential_coloring(g);
        r.value = colours_used(r.coloring);
        r.method = "greedy";
    }
    r.status = r.lower_bound >= r.value ? SolveStatus::exact : SolveStatus::bound;
    if (r.status == SolveStatus::exact) r.lower_bound = r.value;
    return r;
}

CoverResult clique_cover(const Graph &g, const CoverOptions &options) {
    CoverResult r;
    const std::size_t n = g.size();
    if (n == 0) return r;
    if (!options.hint.empty() && !is_clique_cover(g, options.hint)) {
        throw Error(ErrorCode::InvalidHint, "cover hint is not a cover by cliques");
    }
    r.lower_bound = std::max<std::size_t>(options.lower_bound, 1);
    if (const std::size_t omega = exact_omega_or_zero(g, options.budget_seconds / 2); omega > 0) {
        r.lower_bound = std::max(r.lower_bound, (n + omega - 1) / omega);
    }
    if (!options.hint.empty()) {
        r.cover = options.hint;
        r.value = r.cover.size();
        r.method = "hint";
    }
    if (r.cover.empty() || r.value > r.lower_bound) {
        ColoringOptions co;
        co.budget_seconds = options.budget_seconds;
        co.lower_bound = r.lower_bound;
        const Graph gc = complement(g);
        const bool small = n <= kExactColoringVertices;
        if (small || r.cover.empty()) {
            const ColoringResult c = chromatic_number(gc, co);
            if (r.cover.empty() || c.value < r.value) {
                r.cover.assign(c.value, {});
                for (std::size_t v = 0; v < n; ++v) r.cover[c.coloring[v]].push_back(static_cast<int>(v));
                r.value = c.value;
                r.method = c.method == "search" ? "search" : "greedy";
            }
            r.lower_bound = std::max(r.lower_bound, c.lower_bound);
        }
    }
    r.status = r.lower_bound >= r.value ? SolveStatus::exact : SolveStatus::bound;
    if (r.status == SolveStatus::exact) r.lower_bound = r.value;
    return r;
}

}  // namespace qctx
