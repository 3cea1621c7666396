#include "incfree/incidence_free.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <thread>

namespace incfree {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t isqrt(std::size_t n) {
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Pair of size min(|points|, |blocks|) keeping the smallest indices.
IncidenceFreePair truncate_pair(std::vector<std::size_t> points, std::vector<std::size_t> blocks) {
    std::sort(points.begin(), points.end());
    std::sort(blocks.begin(), blocks.end());
    const auto s = std::min(points.size(), blocks.size());
    points.resize(s);
    blocks.resize(s);
    return {std::move(points), std::move(blocks)};
}

class ExactSearch {
public:
    ExactSearch(const SymmetricDesign& d, const SearchConfig& cfg, PairCertificate seed_pair)
        : design_(d), cfg_(cfg), deadline_(Clock::now() + cfg.time_budget), best_pair_(std::move(seed_pair.pair)) {
        best_.store(best_pair_.size());
        cap_ = d.v();
        if (cfg.use_bound_pruning && d.is_plane()) {
            bound_ = haemers_bound_floor(d.order());
            cap_ = *bound_;
        }
    }

    void run() {
        Bitset cand(design_.v());
        cand.set_all();
        Bitset open(design_.v());
        open.set_all();
        std::vector<std::size_t> chosen;

        if (cfg_.workers <= 1) {
            dfs(chosen, cand, std::move(open));
            return;
        }

        // Root split: task i includes the i-th point in branching order and
        // excludes all earlier ones.
        if (!visit(chosen, cand)) return;
        const auto order = branching_order(cand, open);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            std::vector<std::size_t> local;
            for (;;) {
                const auto i = next.fetch_add(1);
                if (i >= order.size() || stopped()) return;
                Bitset task_open = open;
                for (std::size_t j = 0; j <= i; ++j) task_open.reset(order[j]);
                Bitset task_cand = cand;
                task_cand.and_not(design_.blocks_through(order[i]));
                local.assign(1, order[i]);
                dfs(local, task_cand, std::move(task_open));
            }
        };
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < cfg_.workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    bool exhausted() const noexcept { return exhausted_.load(); }
    std::uint64_t nodes() const noexcept { return nodes_.load(); }
    std::optional<std::size_t> bound() const noexcept { return bound_; }
    IncidenceFreePair best_pair() const {
        std::lock_guard lock(mutex_);
        return best_pair_;
    }

private:
    bool stopped() const noexcept { return exhausted_.load(std::memory_order_relaxed) || best_.load() >= cap_; }

    // Counts the node, enforces budgets and records an improved incumbent.
    // Returns false when the search must stop.
    bool visit(const std::vector<std::size_t>& chosen, const Bitset& cand) {
        const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > cfg_.node_budget || ((n & 255) == 0 && Clock::now() > deadline_)) exhausted_.store(true);
        if (stopped()) return false;

        const auto value = std::min(chosen.size(), cand.count());
        if (value > best_.load()) {
            std::lock_guard lock(mutex_);
            if (value > best_.load()) {
                best_pair_ = truncate_pair(chosen, cand.indices());
                best_.store(value);
            }
        }
        return best_.load() < cap_;
    }

    // Points worth branching on, best first: most surviving candidate blocks.
    std::vector<std::size_t> branching_order(const Bitset& cand, const Bitset& open) const {
        const auto need = best_.load() + 1;
        std::vector<std::pair<std::size_t, std::size_t>> scored;
        open.for_each([&](std::size_t u) {
            const auto keep = cand.count_and_not(design_.blocks_through(u));
            if (keep >= need) scored.emplace_back(keep, u);
        });
        std::stable_sort(scored.begin(), scored.end(), [](auto a, auto b) { return a.first > b.first; });
        std::vector<std::size_t> out;
        for (auto [score, u] : scored) out.push_back(u);
        return out;
    }

    void dfs(std::vector<std::size_t>& chosen, const Bitset& cand, Bitset open) {
        for (;;) {
            if (!visit(chosen, cand)) return;
            const auto need = best_.load() + 1;
            // Blocks only disappear as points are added.
            if (cand.count() < need) return;

            std::size_t pick = Bitset::npos, pick_keep = 0, available = 0;
            open.for_each([&](std::size_t u) {
                const auto keep = cand.count_and_not(design_.blocks_through(u));
                if (keep < need) {
                    open.reset(u);
                    return;
                }
                ++available;
                if (pick == Bitset::npos || keep > pick_keep) {
                    pick = u;
                    pick_keep = keep;
                }
            });
            if (chosen.size() + available < need) return;

            open.reset(pick);
            Bitset child = cand;
            child.and_not(design_.blocks_through(pick));
            chosen.push_back(pick);
            dfs(chosen, child, open);
            chosen.pop_back();
        }
    }

    const SymmetricDesign& design_;
    SearchConfig cfg_;
    Clock::time_point deadline_;
    std::size_t cap_ = 0;
    std::optional<std::size_t> bound_;
    std::atomic<std::size_t> best_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
    mutable std::mutex mutex_;
    IncidenceFreePair best_pair_;
};

}  // namespace

std::string_view to_string(SearchMode mode) { return mode == SearchMode::Exact ? "exact" : "heuristic"; }

BudgetExhausted::BudgetExhausted(PairCertificate best)
    : Error(ErrorKind::BudgetExhausted, "search budget exhausted with incumbent of size " + std::to_string(best.size()),
            {best.size()}),
      best_(std::move(best)) {}

double haemers_bound(std::size_t q) {
    const double r = std::sqrt(static_cast<double>(q));
    return r * (static_cast<double>(q) - r + 1.0);
}

std::size_t haemers_bound_floor(std::size_t q) {
    // sqrt(q)(q - sqrt(q) + 1) = (q+1)sqrt(q) - q
    return isqrt((q + 1) * (q + 1) * q) - q;
}

std::optional<std::size_t> table_chromatic_number(std::size_t q) {
    static const std::map<std::size_t, std::size_t> chi = {
        {2, 5}, {3, 10}, {4, 15}, {5, 24}, {7, 44}, {8, 57}, {9, 72}, {11, 122}, {13, 147},
    };
    if (auto it = chi.find(q); it != chi.end()) return it->second;
    return std::nullopt;
}

std::optional<std::size_t> alpha_from_table(std::size_t q) {
    if (auto chi = table_chromatic_number(q)) return q * q + q + 1 - *chi;
    return std::nullopt;
}

PairCertificate max_pair_exact(const SymmetricDesign& design, const SearchConfig& cfg) {
    const auto start = Clock::now();
    auto seed = greedy_pair(design, cfg.seed);
    ExactSearch search(design, cfg, seed);
    search.run();

    PairCertificate cert;
    cert.pair = search.best_pair();
    cert.upper_bound_used = search.bound();
    cert.nodes_explored = search.nodes();
    cert.wall_time = Clock::now() - start;
    if (search.exhausted()) {
        cert.mode = SearchMode::Heuristic;
        throw BudgetExhausted(std::move(cert));
    }
    cert.mode = SearchMode::Exact;
    return cert;
}

PairCertificate greedy_pair(const SymmetricDesign& design, std::uint64_t seed, std::size_t restarts) {
    const auto start = Clock::now();
    const std::size_t v = design.v();
    std::mt19937_64 rng(seed);
    PairCertificate cert;
    cert.mode = SearchMode::Heuristic;

    std::vector<std::size_t> ties;
    for (std::size_t run = 0; run < std::max<std::size_t>(restarts, 1); ++run) {
        Bitset cand(v), open(v);
        cand.set_all();
        open.set_all();
        std::vector<std::size_t> chosen;
        while (open.any() && cand.any()) {
            std::size_t best_keep = 0;
            ties.clear();
            open.for_each([&](std::size_t u) {
                const auto keep = cand.count_and_not(design.blocks_through(u));
                if (ties.empty() || keep > best_keep) {
                    best_keep = keep;
                    ties.assign(1, u);
                } else if (keep == best_keep) {
                    ties.push_back(u);
                }
            });
            const auto u = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
            ++cert.nodes_explored;
            open.reset(u);
            cand.and_not(design.blocks_through(u));
            chosen.push_back(u);
            if (std::min(chosen.size(), cand.count()) > cert.size())
                cert.pair = truncate_pair(chosen, cand.indices());
            if (cand.count() <= chosen.size()) break;
        }
    }
    cert.wall_time = Clock::now() - start;
    return cert;
}

IncidenceFreePair random_pair(const SymmetricDesign& design, std::uint64_t seed) {
    const std::size_t v = design.v();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(v);
    for (std::size_t i = 0; i < v; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    const auto target = std::uniform_int_distribution<std::size_t>(0, v)(rng);
    Bitset cand(v);
    cand.set_all();
    std::vector<std::size_t> chosen;
    for (auto u : order) {
        if (chosen.size() >= target) break;
        if (cand.count_and_not(design.blocks_through(u)) < chosen.size() + 1) continue;
        cand.and_not(design.blocks_through(u));
        chosen.push_back(u);
    }
    auto blocks = cand.indices();
    std::shuffle(blocks.begin(), blocks.end(), rng);
    blocks.resize(chosen.size());
    return check_pair(design, std::move(chosen), std::move(blocks));
}

}  // namespace incfree
