#pragma once

#include <span>
#include <string_view>

#include "alliance/graph.hpp"

namespace alliance {

enum class family { empty, complete, cycle, path, star, complete_bipartite, petersen };

std::string_view to_string(family f) noexcept;

/// Named graph with its documented labelling:
///   cycle(n):   v_i ~ v_{(i+1) mod n}
///   path(n):    v_i ~ v_{i+1}
///   star(n):    centre 0, leaves 1..n-1
///   complete_bipartite(p, q): parts {0..p-1} and {p..p+q-1}
///   petersen(): outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5
graph generate_named(family f, std::span<const int> params);

graph empty_graph(int n);
graph complete_graph(int n);
graph cycle_graph(int n);
graph path_graph(int n);
graph star_graph(int n);
graph complete_bipartite_graph(int p, int q);
graph petersen_graph();

/// Vertex (a, b) gets index a * h.order() + b.
graph cartesian_product(const graph& g, const graph& h);

/// h's vertices are shifted by g.order(); no edges between the parts.
graph disjoint_union(const graph& g, const graph& h);

}  // namespace alliance
