#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "alliance/vertex_set.hpp"

namespace alliance {

using edge = std::pair<int, int>;

/// Immutable simple graph on 1..64 vertices. Row v of the adjacency is N(v).
class graph {
public:
    /// Builds a graph from explicit edges. Duplicate pairs collapse, loops are rejected.
    static graph from_edge_list(int n, std::span<const edge> edges);
    static graph from_edge_list(int n, std::initializer_list<edge> edges) {
        return from_edge_list(n, std::span<const edge>(edges.begin(), edges.size()));
    }
    /// Builds a graph from adjacency rows; rows must be symmetric and loop-free.
    static graph from_rows(std::vector<vertex_set> rows);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int size() const noexcept { return size_; }
    vertex_set vertices() const noexcept { return vertex_set::first(order()); }

    vertex_set neighbors(int v) const noexcept { return rows_[v]; }
    std::span<const vertex_set> rows() const noexcept { return rows_; }
    int degree(int v) const noexcept { return rows_[v].size(); }
    bool adjacent(int u, int v) const noexcept { return rows_[u].contains(v); }

    int min_degree() const noexcept { return min_degree_; }
    int max_degree() const noexcept { return max_degree_; }
    /// The common degree when every vertex has the same degree.
    std::optional<int> regular_degree() const noexcept {
        if (min_degree_ == max_degree_) return max_degree_;
        return std::nullopt;
    }

    /// Edges (u, v) with u < v in row-major order.
    std::vector<edge> edges() const;

    /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in index order.
    graph induced(vertex_set keep) const;
    /// Image under the relabelling v -> perm[v].
    graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const graph&, const graph&) = default;

private:
    explicit graph(std::vector<vertex_set> rows);

    std::vector<vertex_set> rows_;
    int size_ = 0;
    int min_degree_ = 0;
    int max_degree_ = 0;
};

struct degree_sequence {
    std::vector<int> degrees;  // non-increasing
    int distinct_values = 0;
};

degree_sequence degree_sequence_of(const graph& g);

/// True iff the subgraph induced by `s` is connected. Throws on an empty set.
bool is_connected_subset(const graph& g, vertex_set s);

/// Vertices of `s` reachable from `start` inside the subgraph induced by `s`.
vertex_set reachable_within(const graph& g, vertex_set s, int start);

std::vector<vertex_set> connected_components(const graph& g);
bool is_connected(const graph& g);

/// Vertices whose removal increases the number of connected components.
vertex_set cut_vertices(const graph& g);

}  // namespace alliance
