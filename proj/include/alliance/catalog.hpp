#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "alliance/canonical.hpp"
#include "alliance/graph.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

inline constexpr int exhaustive_limit = 7;

enum class entry_source { generated, named };

std::string_view to_string(entry_source s) noexcept;

struct catalog_entry {
    canonical_form canonical;
    graph representative;  // canonically labelled
    polynomial poly;
    bool connected = false;
    entry_source source = entry_source::generated;
};

struct catalog_options {
    int workers = 1;
    int canonical_limit = default_canonical_limit;
};

catalog_entry make_entry(const graph& g, entry_source source, const catalog_options& options = {});

/// All degree-regular graphs of order n up to isomorphism, sorted by canonical bytes.
std::vector<catalog_entry> enumerate_regular(int n, int degree, bool connected_only,
                                             const catalog_options& options = {});

/// Every isomorphism class of simple graphs on n <= 7 vertices, sorted by canonical bytes.
std::vector<catalog_entry> enumerate_all_graphs(int n, const catalog_options& options = {});

/// Merges entry lists, keeping one entry per canonical form. Result is sorted.
std::vector<catalog_entry> pool_entries(std::vector<std::vector<catalog_entry>> parts);

struct collision_report {
    // Indices into the input list; only groups with two or more members.
    std::vector<std::vector<std::size_t>> by_polynomial;
    std::vector<std::vector<std::size_t>> by_evaluation_at_one;
};

/// Groups entries sharing a polynomial, and separately sharing A(G;1).
collision_report distinguish(const std::vector<catalog_entry>& entries);

struct regularity_violation {
    std::vector<std::size_t> group;
    std::string reason;
};

/// Polynomial collision groups that contradict the regular-graph uniqueness results:
/// a delta-regular member (delta <= 3) sharing its polynomial with a graph that is not
/// delta-regular with the same order, size and component count, or two regular
/// members that differ in order, size, degree or component count.
std::vector<regularity_violation> regularity_violations(const std::vector<catalog_entry>& entries,
                                                        const collision_report& report);

}  // namespace alliance
