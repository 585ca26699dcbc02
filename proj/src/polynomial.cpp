#include "alliance/polynomial.hpp"

#include <sstream>

#include "json.hpp"

#include "alliance/error.hpp"
#include "alliance/vertex_set.hpp"

namespace alliance {

polynomial::polynomial(int order, int max_degree, term_map terms)
    : order_(order), max_degree_(max_degree), terms_(std::move(terms)) {
    if (order_ < 1 || order_ > max_order) {
        throw error(errc::order_out_of_range, "polynomial order " + std::to_string(order_));
    }
    if (max_degree_ < 0 || max_degree_ >= order_) {
        throw error(errc::malformed_polynomial, "max degree " + std::to_string(max_degree_) +
                                                    " with order " + std::to_string(order_));
    }
    std::erase_if(terms_, [](const auto& term) { return term.second == 0; });
    if (terms_.empty()) throw error(errc::malformed_polynomial, "no nonzero coefficient");
    for (const auto& [exponent, c] : terms_) {
        if (c < 0) {
            throw error(errc::malformed_polynomial,
                        "negative coefficient at exponent " + std::to_string(exponent));
        }
        if (exponent < order_ - max_degree_ || exponent > order_ + max_degree_) {
            throw error(errc::malformed_polynomial,
                        "exponent " + std::to_string(exponent) + " outside [n-delta, n+delta]");
        }
    }
}

big_int polynomial::coefficient(int k) const {
    if (k < -max_degree_ || k > max_degree_) {
        throw error(errc::index_out_of_k_range, "k = " + std::to_string(k) + " with delta = " +
                                                    std::to_string(max_degree_));
    }
    return at_exponent(order_ + k);
}

big_int polynomial::at_exponent(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? big_int(0) : it->second;
}

rational evaluate(const polynomial& p, const rational& x) {
    // Horner over the dense exponent range, from the top down.
    rational acc = 0;
    int exponent = p.degree();
    auto it = p.terms().rbegin();
    for (; exponent >= 0; --exponent) {
        acc *= x;
        if (it != p.terms().rend() && it->first == exponent) {
            acc += rational(it->second);
            ++it;
        }
    }
    return acc;
}

polynomial disjoint_union_poly(const polynomial& pg, const polynomial& ph) {
    const int ng = pg.order();
    const int nh = ph.order();
    if (ng + nh > max_order) {
        throw error(errc::union_too_large, "union order " + std::to_string(ng + nh) + " > 64");
    }
    polynomial::term_map terms;
    for (const auto& [e, c] : pg.terms()) terms[e + nh] += c;
    for (const auto& [e, c] : ph.terms()) terms[e + ng] += c;
    return polynomial(ng + nh, std::max(pg.max_degree(), ph.max_degree()), std::move(terms));
}

std::string render_text(const polynomial& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << " + ";
        out << c << "*x^" << e;
        first = false;
    }
    return out.str();
}

std::string render_json(const polynomial& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.str();
    nlohmann::ordered_json j;
    j["n"] = p.order();
    j["delta"] = p.max_degree();
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

polynomial polynomial_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(errc::malformed_polynomial, e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        const int delta = j.at("delta").get<int>();
        polynomial::term_map terms;
        for (const auto& [key, value] : j.at("coeffs").items()) {
            std::size_t used = 0;
            const int exponent = std::stoi(key, &used);
            if (used != key.size()) throw error(errc::malformed_polynomial, "exponent key '" + key + "'");
            const std::string digits = value.is_string() ? value.get<std::string>()
                                                         : std::to_string(value.get<long long>());
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
                throw error(errc::malformed_polynomial, "coefficient '" + digits + "'");
            }
            terms[exponent] = big_int(digits);
        }
        return polynomial(n, delta, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::malformed_polynomial, e.what());
    } catch (const std::invalid_argument&) {
        throw error(errc::malformed_polynomial, "non-numeric exponent key");
    } catch (const std::out_of_range&) {
        throw error(errc::malformed_polynomial, "exponent key out of range");
    }
}

}  // namespace alliance
