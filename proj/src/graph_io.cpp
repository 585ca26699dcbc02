#include "alliance/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "alliance/error.hpp"

namespace alliance {

namespace {

constexpr int bias = 63;

int bit_bytes(int n) {
    const int bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    constexpr std::string_view prefix = ">>graph6<<";
    if (text.starts_with(prefix)) text.remove_prefix(prefix.size());

    if (text.empty()) throw error(errc::malformed_header, "empty graph6 string");
    const int head = static_cast<unsigned char>(text[0]);
    if (head < bias || head > 126) {
        throw error(errc::malformed_header, "header byte " + std::to_string(head) + " out of range");
    }
    if (head == 126) {
        throw error(errc::order_too_large_for_format, "long graph6 header (n > 62) not supported");
    }
    const int n = head - bias;
    if (n == 0) throw error(errc::order_out_of_range, "graph6 header encodes order 0");

    const std::string_view body = text.substr(1);
    const int expected = bit_bytes(n);
    for (std::size_t i = 0; i < body.size() && static_cast<int>(i) < expected; ++i) {
        const int c = static_cast<unsigned char>(body[i]);
        if (c < bias || c > 126) {
            throw error(errc::invalid_byte, "byte " + std::to_string(c) + " at offset " +
                                                std::to_string(i + 1));
        }
    }
    if (static_cast<int>(body.size()) < expected) {
        throw error(errc::truncated_bit_vector, "expected " + std::to_string(expected) +
                                                    " bit bytes, found " +
                                                    std::to_string(body.size()));
    }
    if (static_cast<int>(body.size()) > expected) {
        throw error(errc::trailing_garbage, std::to_string(body.size() - expected) +
                                                " bytes after the bit vector");
    }

    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    std::vector<vertex_set> rows(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = static_cast<unsigned char>(body[bit / 6]) - bias;
            if ((chunk >> (5 - bit % 6)) & 1) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    // Nonzero padding bits are ignored.
    return graph::from_rows(std::move(rows));
}

std::string encode_graph6(const graph& g) {
    const int n = g.order();
    if (n > graph6_max_order) {
        throw error(errc::order_too_large_for_format,
                    "order " + std::to_string(n) + " needs the long graph6 header");
    }
    std::vector<int> chunks(bit_bytes(n), 0);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) chunks[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    std::string out;
    out.reserve(1 + chunks.size());
    out.push_back(static_cast<char>(n + bias));
    for (int c : chunks) out.push_back(static_cast<char>(c + bias));
    return out;
}

namespace {

struct token {
    long long value;
    int line;
};

std::vector<token> tokenize_edge_list(std::istream& in) {
    std::vector<token> tokens;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string word;
        while (fields >> word) {
            long long value = 0;
            auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || end != word.data() + word.size()) {
                throw error(errc::malformed_edge_list,
                            "line " + std::to_string(line_no) + ": not an integer: '" + word + "'");
            }
            tokens.push_back({value, line_no});
        }
    }
    return tokens;
}

}  // namespace

graph parse_edge_list(std::istream& in) {
    const auto tokens = tokenize_edge_list(in);
    if (tokens.size() < 2) throw error(errc::malformed_edge_list, "missing \"n m\" header");
    const long long n = tokens[0].value;
    const long long m = tokens[1].value;
    if (n < 1 || n > max_order) {
        throw error(errc::order_out_of_range, "order " + std::to_string(n) + " not in [1, 64]");
    }
    if (m < 0 || static_cast<long long>(tokens.size()) != 2 + 2 * m) {
        throw error(errc::malformed_edge_list, "header announces " + std::to_string(m) +
                                                   " edges but " +
                                                   std::to_string(tokens.size() - 2) +
                                                   " endpoints follow");
    }
    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        const auto& a = tokens[2 + 2 * e];
        const auto& b = tokens[3 + 2 * e];
        if (a.value < 0 || a.value >= n || b.value < 0 || b.value >= n) {
            throw error(errc::vertex_out_of_range,
                        "line " + std::to_string(a.line) + ": endpoint out of range");
        }
        if (a.value == b.value) {
            throw error(errc::loop_edge, "line " + std::to_string(a.line) + ": loop at vertex " +
                                             std::to_string(a.value));
        }
        edges.emplace_back(static_cast<int>(a.value), static_cast<int>(b.value));
    }
    return graph::from_edge_list(static_cast<int>(n), edges);
}

graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string write_edge_list(const graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace alliance
