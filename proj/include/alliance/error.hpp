#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alliance {

enum class errc {
    order_out_of_range,
    loop_edge,
    vertex_out_of_range,
    malformed_header,
    invalid_byte,
    truncated_bit_vector,
    trailing_garbage,
    malformed_edge_list,
    order_too_large_for_format,
    bad_params,
    product_too_large,
    union_too_large,
    empty_set,
    disconnected_subset,
    order_exceeds_naive_limit,
    index_out_of_k_range,
    polynomial_graph_mismatch,
    not_regular,
    not_cubic,
    order_exceeds_canonical_limit,
    infeasible_params,
    order_exceeds_exhaustive_limit,
    unsupported_order,
    malformed_polynomial,
};

std::string_view to_string(errc code) noexcept;

// Input that could not be read as a graph or polynomial.
bool is_parse_error(errc code) noexcept;
// Request that exceeds a size cap or is infeasible for the requested family.
bool is_capacity_error(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace alliance
