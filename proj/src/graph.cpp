#include "alliance/graph.hpp"

#include <algorithm>
#include <sstream>

#include "alliance/error.hpp"

namespace alliance {

std::string vertex_set::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first_member = true;
    for (int v : *this) {
        if (!first_member) out << ',';
        out << v;
        first_member = false;
    }
    out << '}';
    return out.str();
}

graph::graph(std::vector<vertex_set> rows) : rows_(std::move(rows)) {
    int total = 0;
    min_degree_ = max_order;
    max_degree_ = 0;
    for (const auto& row : rows_) {
        const int d = row.size();
        total += d;
        min_degree_ = std::min(min_degree_, d);
        max_degree_ = std::max(max_degree_, d);
    }
    size_ = total / 2;
}

graph graph::from_edge_list(int n, std::span<const edge> edges) {
    if (n < 1 || n > max_order) {
        throw error(errc::order_out_of_range, "order " + std::to_string(n) + " not in [1, 64]");
    }
    std::vector<vertex_set> rows(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw error(errc::vertex_out_of_range, "edge (" + std::to_string(u) + "," +
                                                      std::to_string(v) + ") with order " +
                                                      std::to_string(n));
        }
        if (u == v) throw error(errc::loop_edge, "loop at vertex " + std::to_string(u));
        rows[u].insert(v);
        rows[v].insert(u);
    }
    return graph(std::move(rows));
}

graph graph::from_rows(std::vector<vertex_set> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > max_order) {
        throw error(errc::order_out_of_range, "order " + std::to_string(n) + " not in [1, 64]");
    }
    const vertex_set all = vertex_set::first(n);
    for (int v = 0; v < n; ++v) {
        if (!rows[v].is_subset_of(all)) {
            throw error(errc::vertex_out_of_range, "row " + std::to_string(v) + " has bits >= n");
        }
        if (rows[v].contains(v)) throw error(errc::loop_edge, "loop at vertex " + std::to_string(v));
        for (int u : rows[v]) {
            if (!rows[u].contains(v)) {
                throw error(errc::bad_params, "asymmetric adjacency between " + std::to_string(u) +
                                                  " and " + std::to_string(v));
            }
        }
    }
    return graph(std::move(rows));
}

std::vector<edge> graph::edges() const {
    std::vector<edge> out;
    out.reserve(size_);
    for (int u = 0; u < order(); ++u) {
        for (int v : rows_[u]) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

graph graph::induced(vertex_set keep) const {
    std::vector<int> index(order(), -1);
    int next = 0;
    for (int v : keep) index[v] = next++;
    std::vector<vertex_set> rows(next);
    for (int v : keep) {
        for (int u : rows_[v] & keep) rows[index[v]].insert(index[u]);
    }
    return graph(std::move(rows));
}

graph graph::relabeled(std::span<const int> perm) const {
    std::vector<vertex_set> rows(order());
    for (int v = 0; v < order(); ++v) {
        for (int u : rows_[v]) rows[perm[v]].insert(perm[u]);
    }
    return graph(std::move(rows));
}

degree_sequence degree_sequence_of(const graph& g) {
    degree_sequence seq;
    seq.degrees.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) seq.degrees.push_back(g.degree(v));
    std::sort(seq.degrees.begin(), seq.degrees.end(), std::greater<>());
    std::vector<int> distinct = seq.degrees;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    seq.distinct_values = static_cast<int>(distinct.size());
    return seq;
}

vertex_set reachable_within(const graph& g, vertex_set s, int start) {
    vertex_set seen = vertex_set::single(start);
    vertex_set frontier = seen;
    while (!frontier.empty()) {
        vertex_set next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & s).minus(seen);
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected_subset(const graph& g, vertex_set s) {
    if (s.empty()) throw error(errc::empty_set, "connectivity of the empty set");
    return reachable_within(g, s, s.lowest()) == s;
}

std::vector<vertex_set> connected_components(const graph& g) {
    std::vector<vertex_set> out;
    vertex_set rest = g.vertices();
    while (!rest.empty()) {
        vertex_set comp = reachable_within(g, rest, rest.lowest());
        out.push_back(comp);
        rest = rest.minus(comp);
    }
    return out;
}

bool is_connected(const graph& g) {
    return is_connected_subset(g, g.vertices());
}

vertex_set cut_vertices(const graph& g) {
    // Iterative Hopcroft-Tarjan articulation points.
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<vertex_set> pending(n);
    vertex_set cuts;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        pending[root] = g.neighbors(root);
        while (!stack.empty()) {
            const int v = stack.back();
            if (!pending[v].empty()) {
                const int u = pending[v].lowest();
                pending[v].erase(u);
                if (disc[u] < 0) {
                    parent[u] = v;
                    ++child_count[v];
                    disc[u] = low[u] = timer++;
                    pending[u] = g.neighbors(u);
                    stack.push_back(u);
                } else if (u != parent[v]) {
                    low[v] = std::min(low[v], disc[u]);
                }
                continue;
            }
            stack.pop_back();
            const int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (parent[p] >= 0 && low[v] >= disc[p]) cuts.insert(p);
            }
        }
        if (child_count[root] > 1) cuts.insert(root);
    }
    return cuts;
}

}  // namespace alliance
