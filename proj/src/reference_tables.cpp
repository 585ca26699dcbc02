#include "alliance/reference_tables.hpp"

#include <algorithm>

#include "alliance/error.hpp"
#include "json.hpp"

namespace alliance {

namespace {

struct cubic_row {
    int order;
    const char* label;
    const char* provenance;
    // A_{-3}, A_{-1}, A_1, A_3
    long long a[4];
};

// Order 4 has no printed polynomial; its row comes from exhaustive enumeration of K4.
constexpr cubic_row cubic_rows[] = {
    {4, "K4", "derived", {4, 6, 4, 1}},

    {6, "K33", "published", {6, 33, 15, 1}},
    {6, "P2xC3", "published", {6, 33, 11, 1}},

    {8, "Cub8_1 (K4 + K4)", "published", {8, 12, 8, 2}},
    {8, "Cub8_2 (P2xC4)", "published", {8, 128, 30, 1}},
    {8, "Cub8_3", "published", {8, 132, 32, 1}},
    {8, "Cub8_4", "published", {8, 94, 20, 1}},
    {8, "Cub8_5", "published", {8, 118, 24, 1}},
    {8, "Cub8_6", "published", {8, 126, 28, 1}},

    {10, "Cub10_1", "published", {10, 480, 77, 1}},
    {10, "Cub10_2", "published", {10, 425, 67, 1}},
    {10, "Cub10_3", "published", {10, 435, 65, 1}},
    {10, "Cub10_4", "published", {10, 451, 69, 1}},
    {10, "Cub10_5", "published", {10, 404, 61, 1}},
    {10, "Cub10_6", "published", {10, 462, 67, 1}},
    {10, "Cub10_7", "published", {10, 393, 61, 1}},
    {10, "Cub10_8", "published", {10, 407, 56, 1}},
    {10, "Cub10_9", "published", {10, 357, 53, 1}},
    {10, "Cub10_10", "published", {10, 387, 55, 1}},
    {10, "Cub10_11", "published", {10, 307, 55, 1}},
    {10, "Cub10_12", "published", {10, 304, 48, 1}},
    {10, "Cub10_13", "published", {10, 267, 43, 1}},
    {10, "Cub10_14", "published", {10, 424, 67, 1}},
    {10, "Cub10_15", "published", {10, 272, 42, 1}},
    {10, "Cub10_16", "published", {10, 419, 62, 1}},
    {10, "Cub10_17", "published", {10, 372, 54, 1}},
    {10, "Cub10_18", "published", {10, 351, 50, 1}},
    {10, "Cub10_19", "published", {10, 176, 36, 1}},
    {10, "Cub10_20 (K4 + K33)", "published", {10, 39, 19, 2}},
    {10, "Cub10_21 (K4 + P2xC3)", "published", {10, 39, 15, 2}},
};

bool supported(int order) {
    return std::find(std::begin(reference_orders), std::end(reference_orders), order) !=
           std::end(reference_orders);
}

}  // namespace

std::vector<reference_row> reference_cubic_polynomials(int order) {
    if (!supported(order)) {
        throw error(errc::unsupported_order, "no reference cubic table for order " + std::to_string(order));
    }
    std::vector<reference_row> out;
    for (const auto& row : cubic_rows) {
        if (row.order != order) continue;
        polynomial::term_map terms;
        for (int i = 0; i < 4; ++i) terms[order - 3 + 2 * i] = row.a[i];
        out.push_back({row.label, row.provenance, polynomial(order, 3, std::move(terms))});
    }
    return out;
}

std::map<int, std::vector<reference_row>> parse_reference_fixture(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(errc::malformed_polynomial, e.what());
    }
    std::map<int, std::vector<reference_row>> out;
    for (const auto& [key, rows] : doc.items()) {
        const int order = std::stoi(key);
        for (const auto& row : rows) {
            nlohmann::json poly = row;
            poly.erase("label");
            poly.erase("provenance");
            out[order].push_back({row.at("label").get<std::string>(), row.at("provenance").get<std::string>(),
                                  polynomial_from_json(poly.dump())});
        }
    }
    return out;
}

std::string write_reference_fixture() {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (int order : reference_orders) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : reference_cubic_polynomials(order)) {
            nlohmann::ordered_json entry;
            entry["label"] = row.label;
            entry["provenance"] = row.provenance;
            const auto poly = nlohmann::ordered_json::parse(render_json(row.poly));
            for (const auto& [k, v] : poly.items()) entry[k] = v;
            rows.push_back(std::move(entry));
        }
        doc[std::to_string(order)] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

reference_comparison verify_against_reference(int order, const catalog_options& options) {
    reference_comparison result;
    result.order = order;
    result.expected = reference_cubic_polynomials(order);
    result.computed = enumerate_regular(order, 3, false, options);
    result.collisions = distinguish(result.computed);

    std::vector<bool> used(result.computed.size(), false);
    for (const auto& row : result.expected) {
        bool found = false;
        for (std::size_t i = 0; i < result.computed.size(); ++i) {
            if (!used[i] && result.computed[i].poly == row.poly) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (found) {
            ++result.matched;
        } else {
            result.missing.push_back(row);
        }
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) result.extra.push_back(i);
    return result;
}

}  // namespace alliance
