#include "alliance/enumerate.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "alliance/error.hpp"

namespace alliance {

namespace {

// Per-k tallies, index k + delta. The total never exceeds 2^n - 1 < 2^64.
using tally = std::vector<std::uint64_t>;

polynomial to_polynomial(const graph& g, const tally& counts) {
    const int delta = g.max_degree();
    polynomial::term_map terms;
    for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
        if (counts[i] != 0) terms.emplace(g.order() + i - delta, big_int(counts[i]));
    }
    return polynomial(g.order(), delta, std::move(terms));
}

}  // namespace

int resolve_workers(int requested) noexcept {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int exact_alliance_index(const graph& g, vertex_set s) {
    if (s.empty()) throw error(errc::empty_set, "alliance index of the empty set");
    if (!s.is_subset_of(g.vertices())) {
        throw error(errc::vertex_out_of_range, "set " + s.to_string() + " exceeds the vertex range");
    }
    if (!is_connected_subset(g, s)) {
        throw error(errc::disconnected_subset, "set " + s.to_string() + " is not connected");
    }
    int best = max_order;
    for (int v : s) {
        const int inside = (g.neighbors(v) & s).size();
        const int outside = g.degree(v) - inside;
        best = std::min(best, inside - outside);
    }
    return best;
}

polynomial alliance_polynomial_naive(const graph& g, int naive_limit) {
    const int n = g.order();
    if (n > naive_limit) {
        throw error(errc::order_exceeds_naive_limit, "order " + std::to_string(n) +
                                                         " exceeds the naive limit " +
                                                         std::to_string(naive_limit));
    }
    const int delta = g.max_degree();
    tally counts(2 * delta + 1, 0);
    const std::uint64_t all = g.vertices().mask();
    for (std::uint64_t mask = 1;; ++mask) {
        const vertex_set s(mask);
        if (is_connected_subset(g, s)) {
            int k = max_order;
            for (int v : s) {
                const int inside = (g.neighbors(v) & s).size();
                k = std::min(k, inside - (g.degree(v) - inside));
            }
            ++counts[k + delta];
        }
        if (mask == all) break;
    }
    return to_polynomial(g, counts);
}

polynomial alliance_polynomial(const graph& g, int workers) {
    const int n = g.order();
    const int delta = g.max_degree();
    const detail::adjacency_cache adj(g);
    const int threads = std::min(resolve_workers(workers), n);

    auto run_root = [&](int root, tally& counts) {
        auto visit = [&](std::uint64_t s) { ++counts[adj.index_of(s) + delta]; };
        for_each_connected_subset_rooted(g, root, visit);
    };

    if (threads <= 1) {
        tally counts(2 * delta + 1, 0);
        for (int root = 0; root < n; ++root) run_root(root, counts);
        return to_polynomial(g, counts);
    }

    std::vector<tally> partial(threads, tally(2 * delta + 1, 0));
    std::atomic<int> next_root{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (int root = next_root++; root < n; root = next_root++) run_root(root, partial[t]);
            });
        }
    }
    tally counts(2 * delta + 1, 0);
    for (const auto& part : partial)
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
    return to_polynomial(g, counts);
}

}  // namespace alliance
