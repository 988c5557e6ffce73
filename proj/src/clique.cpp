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
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "qctx/error.hpp"
#include "qctx/invariants.hpp"

namespace qctx {

std::string_view status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::exact: return "exact";
        case SolveStatus::tolerance: return "tolerance";
        case SolveStatus::bound: return "bound";
        case SolveStatus::skipped: return "skipped";
    }
    return "?";
}

Deadline Deadline::after_seconds(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return d;
}

bool Deadline::expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

bool is_clique(const Graph &g, std::span<const int> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        if (vertices[a] < 0 || static_cast<std::size_t>(vertices[a]) >= g.size()) return false;
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
    }
    return true;
}

bool is_independent_set(const Graph &g, std::span<const int> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        if (vertices[a] < 0 || static_cast<std::size_t>(vertices[a]) >= g.size()) return false;
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) return false;
    }
    return true;
}

std::vector<int> smallest_last_order(const Graph &g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    for (std::size_t i = 0; i < n; ++i) deg[i] = g.degree(i);
    std::vector<int> order(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order[n - 1 - step] = static_cast<int>(best);
        for (int u : g.row(best).members())
            if (!removed[u]) --deg[u];
    }
    return order;
}

namespace {

struct Colored {
    int vertex;
    int colour;
};

class CliqueSearch {
public:
    CliqueSearch(const Graph &g, const CliqueOptions &options) : n_(g.size()), options_(options) {
        order_ = smallest_last_order(g);
        std::vector<int> position(n_);
        for (std::size_t i = 0; i < n_; ++i) position[order_[i]] = static_cast<int>(i);
        adj_.assign(n_, Bitset(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (int u : g.row(order_[i]).members()) adj_[i].set(position[u]);
        if (options.budget_seconds > 0) deadline_ = Deadline::after_seconds(options.budget_seconds);
        for (int v : options.initial) hint_.push_back(position[v]);
    }

    CliqueResult run() {
        CliqueResult result;
        best_global_ = hint_.size();
        if (n_ == 0) return finish(result, {}, true);

        Bitset all(n_);
        all.set_all();
        std::vector<Colored> root = colour_sort(all);
        // Branch b takes root[root.size() - 1 - b] with the candidates ahead of it in `root`.
        const std::size_t branches = root.size();
        std::vector<std::vector<int>> branch_best(branches);
        std::vector<char> branch_done(branches, 0);
        std::atomic<std::size_t> next{0};
        stop_above_ = branches;

        const unsigned jobs = std::max(1u, options_.jobs == 0 ? std::thread::hardware_concurrency() : options_.jobs);
        const bool ties = jobs > 1;
        auto worker = [&] {
            std::vector<int> clique;
            while (true) {
                const std::size_t b = next.fetch_add(1);
                if (b >= branches || b > stop_above_.load() || timed_out_.load()) return;
                const Colored top = root[branches - 1 - b];
                if (top.colour < static_cast<int>(best_global_.load()) ||
                    (!ties && top.colour <= static_cast<int>(best_global_.load())) || reached_upper()) {
                    branch_done[b] = 1;
                    continue;
                }
                Bitset cand(n_);
                for (std::size_t i = 0; i + 1 + b < branches; ++i) cand.set(root[i].vertex);
                cand &= adj_[top.vertex];
                clique.assign(1, top.vertex);
                std::vector<int> local;
                if (!cand.any()) {
                    local = clique;
                } else {
                    expand(clique, cand, local, ties, b, static_cast<std::size_t>(top.colour));
                }
                if (!local.empty()) offer(local);
                branch_best[b] = std::move(local);
                if (!timed_out_.load()) branch_done[b] = 1;
                if (options_.known_upper && branch_best[b].size() >= *options_.known_upper) {
                    std::size_t cur = stop_above_.load();
                    while (b < cur && !stop_above_.compare_exchange_weak(cur, b)) {
                    }
                }
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
            for (auto &t : pool) t.join();
        }

        // Lowest branch index holding the largest clique, unless the hint is at least as large.
        std::vector<int> witness = hint_;
        for (std::size_t b = 0; b < branches; ++b)
            if (branch_best[b].size() > witness.size()) witness = branch_best[b];

        bool complete = !timed_out_.load();
        std::size_t upper = witness.size();
        if (!complete) {
            for (std::size_t b = 0; b < branches; ++b)
                if (!branch_done[b]) upper = std::max<std::size_t>(upper, root[branches - 1 - b].colour);
        }
        if (options_.known_upper) upper = std::min(upper, std::max(*options_.known_upper, witness.size()));
        result.upper_bound = upper;
        return finish(result, witness, complete || upper == witness.size());
    }

private:
    bool reached_upper() const { return options_.known_upper && best_global_.load() >= *options_.known_upper; }

    void offer(const std::vector<int> &clique) {
        std::size_t cur = best_global_.load();
        while (clique.size() > cur && !best_global_.compare_exchange_weak(cur, clique.size())) {
        }
    }

    // Greedy sequential colouring of `p`, vertices listed by nondecreasing colour.
    std::vector<Colored> colour_sort(const Bitset &p) const {
        std::vector<Colored> out;
        Bitset uncoloured = p;
        int colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bitset q = uncoloured;
            for (std::size_t v = q.first(); v < n_; v = q.next(v + 1)) {
                out.push_back({static_cast<int>(v), colour});
                uncoloured.reset(v);
                q.subtract(adj_[v]);
            }
        }
        return out;
    }

    // `cap` is the root colour bound of the branch; it stays valid below the root
    // and is often tighter than the local greedy colouring.
    void expand(std::vector<int> &clique, Bitset cand, std::vector<int> &local, bool ties, std::size_t branch,
                std::size_t cap) {
        if ((++nodes_ & 1023u) == 0 && deadline_.expired()) timed_out_ = true;
        if (timed_out_.load()) return;
        const std::vector<Colored> coloured = colour_sort(cand);
        for (std::size_t idx = coloured.size(); idx-- > 0;) {
            const std::size_t bound = std::min(clique.size() + coloured[idx].colour, cap);
            const std::size_t global = best_global_.load();
            if (bound <= local.size() || bound < global || (!ties && bound <= global)) return;
            if (reached_upper() && (!ties || branch > stop_above_.load())) return;
            const int v = coloured[idx].vertex;
            clique.push_back(v);
            Bitset next = cand;
            next &= adj_[v];
            if (!next.any()) {
                if (clique.size() > local.size()) {
                    local = clique;
                    offer(local);
                }
            } else {
                expand(clique, std::move(next), local, ties, branch, cap);
            }
            clique.pop_back();
            if (timed_out_.load()) return;
            cand.reset(v);
        }
    }

    CliqueResult finish(CliqueResult &r, const std::vector<int> &witness, bool exact) {
        r.witness.clear();
        for (int v : witness) r.witness.push_back(order_[v]);
        std::sort(r.witness.begin(), r.witness.end());
        r.value = r.witness.size();
        if (exact) r.upper_bound = r.value;
        r.status = exact ? SolveStatus::exact : SolveStatus::bound;
        r.nodes = nodes_.load();
        return r;
    }

    std::size_t n_;
    const CliqueOptions &options_;
    std::vector<int> order_;
    std::vector<Bitset> adj_;
    std::vector<int> hint_;
    Deadline deadline_;
    std::atomic<std::size_t> best_global_{0};
    std::atomic<std::size_t> stop_above_{0};
    std::atomic<bool> timed_out_{false};
    std::atomic<std::uint64_t> nodes_{0};
};

}  // namespace

CliqueResult max_clique(const Graph &g, const CliqueOptions &options) {
    if (!is_clique(g, options.initial)) throw Error(ErrorCode::InvalidHint, "initial incumbent is not a clique");
    CliqueSearch search(g, options);
    return search.run();
}

CliqueResult independence_number(const Graph &g, const CliqueOptions &options) {
    if (!is_independent_set(g, options.initial)) {
        throw Error(ErrorCode::InvalidHint, "initial incumbent is not an independent set");
    }
    return max_clique(complement(g), options);
}

namespace {

struct BronKerbosch {
    const Graph &g;
    std::size_t max_cliques;
    Deadline deadline;
    std::vector<std::vector<int>> out;
    std::uint64_t calls = 0;

    void run(std::vector<int> &r, Bitset p, Bitset x) {
        if ((++calls & 255u) == 0 && deadline.expired()) {
            throw Error(ErrorCode::BudgetExceeded, "maximal clique enumeration ran out of time");
        }
        if (!p.any() && !x.any()) {
            if (out.size() >= max_cliques) {
                throw Error(ErrorCode::BudgetExceeded, "too many maximal cliques");
            }
            std::vector<int> clique = r;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
            return;
        }
        // Pivot: vertex of P u X with the most neighbours in P, lowest index on ties.
        std::size_t pivot = g.size(), best = 0;
        Bitset px = p;
        px |= x;
        for (std::size_t u = px.first(); u < g.size(); u = px.next(u + 1)) {
            Bitset t = p;
            t &= g.row(u);
            const std::size_t c = t.count();
            if (pivot == g.size() || c > best) {
                pivot = u;
                best = c;
            }
        }
        Bitset branch = p;
        branch.subtract(g.row(pivot));
        for (std::size_t v = branch.first(); v < g.size(); v = branch.next(v + 1)) {
            r.push_back(static_cast<int>(v));
            Bitset np = p, nx = x;
            np &= g.row(v);
            nx &= g.row(v);
            run(r, std::move(np), std::move(nx));
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph &g, std::size_t max_cliques, Deadline deadline) {
    BronKerbosch bk{g, max_cliques, deadline, {}, 0};
    if (g.size() == 0) return {};
    std::vector<int> r;
    Bitset p(g.size()), x(g.size());
    p.set_all();
    bk.run(r, std::move(p), std::move(x));
    return std::move(bk.out);
}

}  // namespace qctx
