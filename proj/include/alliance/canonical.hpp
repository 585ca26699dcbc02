#pragma once

#include <compare>
#include <string>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance {

inline constexpr int default_canonical_limit = 12;

/// Label-invariant encoding: graph6 bytes of the relabelling whose
/// column-major upper-triangle bit string is lexicographically largest
/// among relabellings that respect the colour-refinement order.
struct canonical_form {
    std::string bytes;

    friend bool operator==(const canonical_form&, const canonical_form&) = default;
    friend auto operator<=>(const canonical_form&, const canonical_form&) = default;
};

/// perm[v] is the canonical position of vertex v.
std::vector<int> canonical_labeling(const graph& g, int limit = default_canonical_limit);

canonical_form canonical_form_of(const graph& g, int limit = default_canonical_limit);

/// g relabelled into canonical order.
graph canonical_graph(const graph& g, int limit = default_canonical_limit);

/// Stable colouring by iterated neighbour-colour refinement, starting from degrees.
/// Colours are ranks of refinement signatures, so they are isomorphism-invariant.
std::vector<int> refine_colors(const graph& g);

}  // namespace alliance
