#include "alliance/error.hpp"

namespace alliance {

std::string_view to_string(errc code) noexcept {
    switch (code) {
    case errc::order_out_of_range: return "OrderOutOfRange";
    case errc::loop_edge: return "LoopEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::malformed_header: return "MalformedHeader";
    case errc::invalid_byte: return "InvalidByte";
    case errc::truncated_bit_vector: return "TruncatedBitVector";
    case errc::trailing_garbage: return "TrailingGarbage";
    case errc::malformed_edge_list: return "MalformedEdgeList";
    case errc::order_too_large_for_format: return "OrderTooLargeForFormat";
    case errc::bad_params: return "BadParams";
    case errc::product_too_large: return "ProductTooLarge";
    case errc::union_too_large: return "UnionTooLarge";
    case errc::empty_set: return "EmptySet";
    case errc::disconnected_subset: return "DisconnectedSubset";
    case errc::order_exceeds_naive_limit: return "OrderExceedsNaiveLimit";
    case errc::index_out_of_k_range: return "IndexOutOfKRange";
    case errc::polynomial_graph_mismatch: return "PolynomialGraphMismatch";
    case errc::not_regular: return "NotRegular";
    case errc::not_cubic: return "NotCubic";
    case errc::order_exceeds_canonical_limit: return "OrderExceedsCanonicalLimit";
    case errc::infeasible_params: return "InfeasibleParams";
    case errc::order_exceeds_exhaustive_limit: return "OrderExceedsExhaustiveLimit";
    case errc::unsupported_order: return "UnsupportedOrder";
    case errc::malformed_polynomial: return "MalformedPolynomial";
    }
    return "Unknown";
}

bool is_parse_error(errc code) noexcept {
    switch (code) {
    case errc::loop_edge:
    case errc::vertex_out_of_range:
    case errc::malformed_header:
    case errc::invalid_byte:
    case errc::truncated_bit_vector:
    case errc::trailing_garbage:
    case errc::malformed_edge_list:
    case errc::malformed_polynomial:
        return true;
    default:
        return false;
    }
}

bool is_capacity_error(errc code) noexcept {
    switch (code) {
    case errc::order_out_of_range:
    case errc::order_too_large_for_format:
    case errc::product_too_large:
    case errc::union_too_large:
    case errc::order_exceeds_naive_limit:
    case errc::order_exceeds_canonical_limit:
    case errc::infeasible_params:
    case errc::order_exceeds_exhaustive_limit:
        return true;
    default:
        return false;
    }
}

}  // namespace alliance
