#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "alliance/catalog.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

/// One published (or derived, for order 4) cubic-graph polynomial.
struct reference_row {
    std::string label;
    std::string provenance;
    polynomial poly;
};

inline constexpr int reference_orders[] = {4, 6, 8, 10};

/// Expected cubic polynomials for order 4, 6, 8 or 10; throws UnsupportedOrder otherwise.
std::vector<reference_row> reference_cubic_polynomials(int order);

/// Reads the JSON fixture format: {"<order>": [{"label", "provenance", "n", "delta", "coeffs"}, ...]}.
std::map<int, std::vector<reference_row>> parse_reference_fixture(std::string_view text);
std::string write_reference_fixture();

struct reference_comparison {
    int order = 0;
    std::vector<catalog_entry> computed;
    std::vector<reference_row> expected;
    std::vector<reference_row> missing;  // expected, not produced by the catalog
    std::vector<std::size_t> extra;      // indices into `computed` absent from the table
    std::size_t matched = 0;
    collision_report collisions;

    bool exact_match() const { return missing.empty() && extra.empty(); }
    bool pairwise_distinct() const { return collisions.by_polynomial.empty(); }
};

/// Generates every cubic graph of the order and compares the polynomial
/// multiset with the reference table.
reference_comparison verify_against_reference(int order, const catalog_options& options = {});

}  // namespace alliance
