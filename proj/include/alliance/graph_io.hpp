#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "alliance/graph.hpp"

namespace alliance {

inline constexpr int graph6_max_order = 62;

/// Parses one graph6 line (short header form, n <= 62). A trailing newline and
/// an optional ">>graph6<<" prefix are accepted.
graph parse_graph6(std::string_view text);

std::string encode_graph6(const graph& g);

/// Edge-list text: first record "n m", then m records "u v" (0-based).
/// '#' starts a comment that runs to the end of the line.
graph parse_edge_list(std::istream& in);
graph parse_edge_list(std::string_view text);

std::string write_edge_list(const graph& g);

}  // namespace alliance
