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
#include <random>

#include "qctx/invariants.hpp"

namespace qctx {

std::string_view cycle_status_name(CycleStatus s) {
    switch (s) {
        case CycleStatus::found: return "found";
        case CycleStatus::absent: return "absent";
        case CycleStatus::not_found: return "not-found";
    }
    return "?";
}

bool is_induced_cycle(const Graph &g, std::span<const int> cyclic_order) {
    const std::size_t len = cyclic_order.size();
    if (len < 3) return false;
    for (std::size_t a = 0; a < len; ++a) {
        if (cyclic_order[a] < 0 || static_cast<std::size_t>(cyclic_order[a]) >= g.size()) return false;
        for (std::size_t b = a + 1; b < len; ++b) {
            if (cyclic_order[a] == cyclic_order[b]) return false;
            const bool consecutive = b == a + 1 || (a == 0 && b == len - 1);
            if (g.adjacent(cyclic_order[a], cyclic_order[b]) != consecutive) return false;
        }
    }
    return true;
}

namespace {

// Enumerates induced cycles of a fixed length once each: the start is the
// least vertex and the second vertex is smaller than the last.
class InducedCycleDfs {
public:
    InducedCycleDfs(const Graph &g, std::size_t length, Deadline deadline, bool stop_at_first)
        : g_(g), n_(g.size()), length_(length), deadline_(deadline), stop_at_first_(stop_at_first) {}

    // Returns false when the deadline interrupted the enumeration.
    bool run() {
        for (std::size_t s = 0; s < n_ && !done(); ++s) {
            above_ = Bitset(n_);
            for (std::size_t v = s + 1; v < n_; ++v) above_.set(v);
            path_.assign(1, static_cast<int>(s));
            Bitset in_path(n_);
            in_path.set(s);
            extend(Bitset(n_), in_path);
        }
        return !timed_out_;
    }

    std::uint64_t count() const { return count_; }
    const std::vector<int> &witness() const { return witness_; }

private:
    bool done() const { return timed_out_ || (stop_at_first_ && count_ > 0); }

    // `blocked` holds neighbours of the interior path vertices path[1..len-2].
    void extend(const Bitset &blocked, Bitset &in_path) {
        if ((++nodes_ & 4095u) == 0 && deadline_.expired()) timed_out_ = true;
        if (done()) return;
        const std::size_t len = path_.size();
        const int s = path_.front();
        const int last = path_.back();
        Bitset cand = g_.row(last);
        cand &= above_;
        cand.subtract(in_path);
        cand.subtract(blocked);
        if (len >= 2 && len + 1 < length_) cand.subtract(g_.row(s));
        if (len + 1 == length_) {
            cand &= g_.row(s);
            for (std::size_t w = cand.first(); w < n_; w = cand.next(w + 1)) {
                if (static_cast<int>(w) < path_[1]) continue;
                if (count_++ == 0) {
                    witness_ = path_;
                    witness_.push_back(static_cast<int>(w));
                }
                if (done()) return;
            }
            return;
        }
        Bitset next_blocked = blocked;
        if (len >= 2) next_blocked |= g_.row(last);
        for (std::size_t w = cand.first(); w < n_; w = cand.next(w + 1)) {
            path_.push_back(static_cast<int>(w));
            in_path.set(w);
            extend(next_blocked, in_path);
            in_path.reset(w);
            path_.pop_back();
            if (done()) return;
        }
    }

    const Graph &g_;
    std::size_t n_;
    std::size_t length_;
    Deadline deadline_;
    bool stop_at_first_;
    Bitset above_;
    std::vector<int> path_;
    std::vector<int> witness_;
    std::uint64_t count_ = 0;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

// Randomized growth of induced paths from random starts until one closes.
std::vector<int> random_induced_cycle(const Graph &g, std::size_t length, Deadline deadline, std::mt19937_64 &rng) {
    const std::size_t n = g.size();
    if (n < length) return {};
    std::uniform_int_distribution<std::size_t> start(0, n - 1);
    std::vector<int> path;
    while (!deadline.expired()) {
        for (int attempt = 0; attempt < 256; ++attempt) {
            path.assign(1, static_cast<int>(start(rng)));
            Bitset in_path(n), blocked(n);
            in_path.set(path[0]);
            while (true) {
                const int s = path.front(), last = path.back();
                Bitset cand = g.row(last);
                cand.subtract(in_path);
                cand.subtract(blocked);
                if (path.size() + 1 == length) {
                    cand &= g.row(s);
                    if (cand.any()) {
                        path.push_back(static_cast<int>(cand.first()));
                        return path;
                    }
                    break;
                }
                if (path.size() >= 2) cand.subtract(g.row(s));
                const auto options = cand.members();
                if (options.empty()) break;
                const int w = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
                if (path.size() >= 2) blocked |= g.row(last);
                path.push_back(w);
                in_path.set(w);
            }
        }
    }
    return {};
}

struct SearchOutcome {
    CycleStatus status;
    std::vector<int> witness;
};

SearchOutcome find_cycle(const Graph &g, std::size_t length, double seconds, const OddCycleOptions &options,
                         std::mt19937_64 &rng) {
    if (g.size() < length) return {CycleStatus::absent, {}};
    const Deadline deadline = Deadline::after_seconds(seconds);
    if (g.size() <= options.exhaustive_vertices) {
        InducedCycleDfs dfs(g, length, deadline, true);
        const bool complete = dfs.run();
        if (dfs.count() > 0) return {CycleStatus::found, dfs.witness()};
        return {complete ? CycleStatus::absent : CycleStatus::not_found, {}};
    }
    auto w = random_induced_cycle(g, length, deadline, rng);
    if (!w.empty()) return {CycleStatus::found, std::move(w)};
    return {CycleStatus::not_found, {}};
}

}  // namespace

std::uint64_t count_induced_cycles(const Graph &g, std::size_t length, Deadline deadline) {
    InducedCycleDfs dfs(g, length, deadline, false);
    dfs.run();
    return dfs.count();
}

std::vector<OddCycleEntry> induced_odd_cycles(const Graph &g, int k_max, const OddCycleOptions &options) {
    std::vector<OddCycleEntry> out;
    if (k_max < 2) return out;
    const Graph gc = complement(g);
    std::mt19937_64 rng(options.seed);
    const double share = options.budget_seconds / (2.0 * (k_max - 1));
    for (int k = 2; k <= k_max; ++k) {
        const std::size_t length = static_cast<std::size_t>(2 * k + 1);
        OddCycleEntry entry;
        entry.k = k;
        auto c = find_cycle(g, length, share, options, rng);
        entry.cycle = c.status;
        entry.cycle_witness = std::move(c.witness);
        auto a = find_cycle(gc, length, share, options, rng);
        entry.anticycle = a.status;
        entry.anticycle_witness = std::move(a.witness);
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace qctx
