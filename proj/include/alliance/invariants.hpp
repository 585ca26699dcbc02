#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alliance/enumerate.hpp"
#include "alliance/graph.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

enum class check_status { pass, fail, not_applicable };

std::string_view to_string(check_status s) noexcept;

struct check_entry {
    std::string id;
    check_status status;
    std::string witness;
};

struct invariant_report {
    std::vector<check_entry> entries;

    int count(check_status s) const;
    int failures() const { return count(check_status::fail); }
    const check_entry* find(std::string_view id) const;
    void append(const invariant_report& other);
};

std::string render_report_json(const invariant_report& report);
std::string render_report_table(const invariant_report& report);

struct invariant_options {
    // Checks that need a brute-force oracle over all 2^n subsets are
    // reported not_applicable above this order.
    int brute_force_limit = default_naive_limit;
};

/// Coefficient properties that hold for every graph. Throws PolynomialGraphMismatch
/// when p does not carry g's order and maximum degree.
invariant_report check_general(const graph& g, const polynomial& p, const invariant_options& options = {});

/// Identities and bounds for regular graphs. Throws NotRegular.
invariant_report check_regular(const graph& g, const polynomial& p, const invariant_options& options = {});

/// Cubic-specific term shape and coefficient inequalities. Throws NotCubic.
invariant_report check_cubic(const graph& g, const polynomial& p);

/// check_general, plus check_regular and check_cubic when they apply.
invariant_report check_all(const graph& g, const polynomial& p, const invariant_options& options = {});

/// Brute-force tallies over every nonempty subset, independent of the
/// alliance index and of the connected-subset enumerator.
struct subset_census {
    big_int connected = 0;
    // by_min_internal_degree[i]: connected induced subgraphs whose minimum degree is i
    std::vector<big_int> by_min_internal_degree;
};

subset_census census_connected_subsets(const graph& g);

bool is_unimodal(const std::vector<big_int>& sequence);

}  // namespace alliance
