#pragma once

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace alliance {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Alliance polynomial sum_k A_k x^(n+k), keyed by the exponent n + k.
///
/// The source graph's order n and maximum degree delta travel with the
/// coefficients so that k = exponent - n can be recovered. Stored
/// coefficients are always >= 1 and every exponent lies in [n - delta, n + delta].
class polynomial {
public:
    using term_map = std::map<int, big_int>;

    polynomial(int order, int max_degree, term_map terms);

    int order() const noexcept { return order_; }
    int max_degree() const noexcept { return max_degree_; }
    const term_map& terms() const noexcept { return terms_; }
    int term_count() const noexcept { return static_cast<int>(terms_.size()); }

    /// Largest exponent with a nonzero coefficient.
    int degree() const { return terms_.rbegin()->first; }
    /// Smallest exponent with a nonzero coefficient.
    int min_degree() const { return terms_.begin()->first; }

    /// A_k for -delta <= k <= delta; throws IndexOutOfKRange outside.
    big_int coefficient(int k) const;
    /// Coefficient of x^exponent, zero when absent.
    big_int at_exponent(int exponent) const;

    /// Equality of the polynomials themselves; the carried n and delta are not compared.
    friend bool operator==(const polynomial& a, const polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const polynomial& a, const polynomial& b) { return a.terms_ < b.terms_; }

private:
    int order_;
    int max_degree_;
    term_map terms_;
};

rational evaluate(const polynomial& p, const rational& x);

/// x^(n_h) A(G) + x^(n_g) A(H): the polynomial of the disjoint union.
polynomial disjoint_union_poly(const polynomial& pg, const polynomial& ph);

/// "c*x^e + ..." in ascending exponent order.
std::string render_text(const polynomial& p);
/// {"n":..,"delta":..,"coeffs":{"<exp>":"<coeff>",...}}
std::string render_json(const polynomial& p);

polynomial polynomial_from_json(std::string_view text);

}  // namespace alliance
