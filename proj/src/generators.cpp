#include "alliance/generators.hpp"

#include <string>
#include <vector>

#include "alliance/error.hpp"

namespace alliance {

std::string_view to_string(family f) noexcept {
    switch (f) {
    case family::empty: return "empty";
    case family::complete: return "complete";
    case family::cycle: return "cycle";
    case family::path: return "path";
    case family::star: return "star";
    case family::complete_bipartite: return "complete_bipartite";
    case family::petersen: return "petersen";
    }
    return "unknown";
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw error(errc::bad_params, what);
}

void require_arity(family f, std::span<const int> params, std::size_t arity) {
    require(params.size() == arity, std::string(to_string(f)) + " takes " +
                                        std::to_string(arity) + " parameter(s)");
}

}  // namespace

graph generate_named(family f, std::span<const int> params) {
    switch (f) {
    case family::empty:
        require_arity(f, params, 1);
        return empty_graph(params[0]);
    case family::complete:
        require_arity(f, params, 1);
        return complete_graph(params[0]);
    case family::cycle:
        require_arity(f, params, 1);
        return cycle_graph(params[0]);
    case family::path:
        require_arity(f, params, 1);
        return path_graph(params[0]);
    case family::star:
        require_arity(f, params, 1);
        return star_graph(params[0]);
    case family::complete_bipartite:
        require_arity(f, params, 2);
        return complete_bipartite_graph(params[0], params[1]);
    case family::petersen:
        require_arity(f, params, 0);
        return petersen_graph();
    }
    throw error(errc::bad_params, "unknown family");
}

graph empty_graph(int n) {
    require(n >= 1 && n <= max_order, "empty graph needs 1 <= n <= 64");
    return graph::from_edge_list(n, {});
}

graph complete_graph(int n) {
    require(n >= 1 && n <= max_order, "complete graph needs 1 <= n <= 64");
    std::vector<edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return graph::from_edge_list(n, edges);
}

graph cycle_graph(int n) {
    require(n >= 3 && n <= max_order, "cycle needs 3 <= n <= 64");
    std::vector<edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return graph::from_edge_list(n, edges);
}

graph path_graph(int n) {
    require(n >= 1 && n <= max_order, "path needs 1 <= n <= 64");
    std::vector<edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return graph::from_edge_list(n, edges);
}

graph star_graph(int n) {
    require(n >= 2 && n <= max_order, "star needs 2 <= n <= 64");
    std::vector<edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return graph::from_edge_list(n, edges);
}

graph complete_bipartite_graph(int p, int q) {
    require(p >= 1 && q >= 1 && p + q <= max_order, "complete bipartite needs p, q >= 1 and p + q <= 64");
    std::vector<edge> edges;
    for (int u = 0; u < p; ++u)
        for (int v = p; v < p + q; ++v) edges.emplace_back(u, v);
    return graph::from_edge_list(p + q, edges);
}

graph petersen_graph() {
    std::vector<edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return graph::from_edge_list(10, edges);
}

graph cartesian_product(const graph& g, const graph& h) {
    const int ng = g.order();
    const int nh = h.order();
    if (ng * nh > max_order) {
        throw error(errc::product_too_large, "product order " + std::to_string(ng * nh) + " > 64");
    }
    std::vector<edge> edges;
    for (int a = 0; a < ng; ++a) {
        for (auto [b1, b2] : h.edges()) edges.emplace_back(a * nh + b1, a * nh + b2);
    }
    for (auto [a1, a2] : g.edges()) {
        for (int b = 0; b < nh; ++b) edges.emplace_back(a1 * nh + b, a2 * nh + b);
    }
    return graph::from_edge_list(ng * nh, edges);
}

graph disjoint_union(const graph& g, const graph& h) {
    const int ng = g.order();
    if (ng + h.order() > max_order) {
        throw error(errc::union_too_large, "union order " + std::to_string(ng + h.order()) + " > 64");
    }
    std::vector<vertex_set> rows(g.rows().begin(), g.rows().end());
    for (auto row : h.rows()) rows.push_back(vertex_set(row.mask() << ng));
    return graph::from_rows(std::move(rows));
}

}  // namespace alliance
