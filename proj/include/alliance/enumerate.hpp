#pragma once

#include <array>
#include <cstdint>

#include "alliance/graph.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

inline constexpr int default_naive_limit = 24;

/// k_S = min over v in S of deg_S(v) - deg_{V\S}(v). S must be nonempty and
/// induce a connected subgraph.
int exact_alliance_index(const graph& g, vertex_set s);

/// Exhaustive enumeration of all 2^n - 1 nonempty subsets with a connectivity
/// filter. Refuses graphs with more than `naive_limit` vertices.
polynomial alliance_polynomial_naive(const graph& g, int naive_limit = default_naive_limit);

/// Enumerates each connected induced subgraph exactly once. `workers` threads
/// share the roots; 0 picks the hardware concurrency. The result does not
/// depend on the worker count.
polynomial alliance_polynomial(const graph& g, int workers = 1);

int resolve_workers(int requested) noexcept;

namespace detail {

struct adjacency_cache {
    std::array<std::uint64_t, max_order> rows{};
    std::array<int, max_order> degree{};
    int n = 0;

    explicit adjacency_cache(const graph& g) : n(g.order()) {
        for (int v = 0; v < n; ++v) {
            rows[v] = g.neighbors(v).mask();
            degree[v] = g.degree(v);
        }
    }

    int index_of(std::uint64_t s) const noexcept {
        int best = max_order;
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int k = 2 * std::popcount(rows[v] & s) - degree[v];
            if (k < best) best = k;
        }
        return best;
    }
};

template <class Visit>
void extend_connected(const adjacency_cache& adj, std::uint64_t set, std::uint64_t frontier,
                      std::uint64_t excluded, Visit& visit) {
    visit(set);
    while (frontier) {
        const std::uint64_t pick = frontier & (~frontier + 1);
        frontier ^= pick;
        excluded |= pick;
        const int v = std::countr_zero(pick);
        extend_connected(adj, set | pick, frontier | (adj.rows[v] & ~set & ~excluded), excluded,
                         visit);
    }
}

}  // namespace detail

/// Calls visit(mask) once for every connected vertex set whose smallest member is `root`.
///
/// Each call branches on one frontier vertex at a time: include it (recurse with
/// its higher-indexed neighbours added to the frontier) or exclude it for the rest
/// of the subtree.
template <class Visit>
void for_each_connected_subset_rooted(const graph& g, int root, Visit&& visit) {
    const detail::adjacency_cache adj(g);
    const std::uint64_t below = (std::uint64_t{2} << root) - 1;  // indices <= root
    const std::uint64_t start = std::uint64_t{1} << root;
    detail::extend_connected(adj, start, adj.rows[root] & ~below, below, visit);
}

template <class Visit>
void for_each_connected_subset(const graph& g, Visit&& visit) {
    for (int root = 0; root < g.order(); ++root) for_each_connected_subset_rooted(g, root, visit);
}

}  // namespace alliance
