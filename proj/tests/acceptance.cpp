// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "alliance/catalog.hpp"
#include "alliance/enumerate.hpp"
#include "alliance/generators.hpp"
#include "alliance/graph_io.hpp"
#include "alliance/invariants.hpp"
#include "alliance/reference_tables.hpp"
#include "test_support.hpp"

using namespace alliance;

namespace {

// Time budgets, in seconds.
constexpr double budget_small_poly = 0.010;
constexpr double budget_order8 = 1.0;
constexpr double budget_order10 = 60.0;
constexpr double budget_invariants = 300.0;

constexpr int random_equivalence_graphs = 1000;
constexpr int random_union_pairs = 200;
constexpr std::uint64_t seed = 20261015;

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [" << what << "]";
        }
    }
};

// Builds x^3-style polynomials from a coefficient list starting at exponent `low`, step 2.
polynomial cubic_poly(int n, std::initializer_list<int> coeffs) {
    std::map<int, big_int> terms;
    int e = n - 3;
    for (int c : coeffs) {
        terms[e] = c;
        e += 2;
    }
    return polynomial(n, 3, terms);
}

std::vector<polynomial> polys_of(const std::vector<catalog_entry>& entries) {
    std::vector<polynomial> out;
    for (const auto& e : entries) out.push_back(e.poly);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<polynomial> polys_of(const std::vector<reference_row>& rows) {
    std::vector<polynomial> out;
    for (const auto& r : rows) out.push_back(r.poly);
    std::sort(out.begin(), out.end());
    return out;
}

bool contains(const std::vector<polynomial>& polys, const polynomial& p) {
    return std::find(polys.begin(), polys.end(), p) != polys.end();
}

// Multiset comparison of computed cubic polynomials with the reference table.
void compare_multiset(outcome& o, int order, const std::vector<catalog_entry>& entries) {
    const auto computed = polys_of(entries);
    const auto expected = polys_of(reference_cubic_polynomials(order));
    o.detail << " " << entries.size() << " cubic graphs";
    if (computed == expected) {
        o.detail << ", multiset equal";
        return;
    }
    o.pass = false;
    std::vector<polynomial> missing, extra;
    std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                        std::back_inserter(missing));
    std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                        std::back_inserter(extra));
    o.detail << ", " << expected.size() - missing.size() << "/" << expected.size() << " table rows matched";
    for (const auto& p : missing) o.detail << "\n      table only:    " << render_text(p);
    for (const auto& p : extra) o.detail << "\n      computed only: " << render_text(p);
}

bool pinned(outcome& o, const std::string& name, const graph& g, const polynomial& expected,
            const std::vector<polynomial>& catalog) {
    const polynomial p = alliance_polynomial(g);
    const bool ok = p == expected && contains(catalog, p);
    o.require(ok, name + " -> " + render_text(p));
    return ok;
}

outcome criterion_1() {
    outcome o;
    const graph k33 = complete_bipartite_graph(3, 3);
    const graph prism = cartesian_product(path_graph(2), cycle_graph(3));
    const auto want_k33 = cubic_poly(6, {6, 33, 15, 1});
    const auto want_prism = cubic_poly(6, {6, 33, 11, 1});
    for (auto [name, g, want] : {std::tuple{"K33", &k33, &want_k33}, std::tuple{"prism", &prism, &want_prism}}) {
        const auto start = clock_type::now();
        const polynomial p = alliance_polynomial(*g, 1);
        const double t = seconds_since(start);
        o.require(p == *want, std::string(name) + " = " + render_text(p));
        o.require(t < budget_small_poly, std::string(name) + " took " + std::to_string(t) + " s");
        o.detail << " " << name << " " << t * 1e3 << " ms;";
    }
    return o;
}

outcome criterion_2() {
    outcome o;
    const auto start = clock_type::now();
    const auto entries = enumerate_regular(8, 3, false);
    const double t = seconds_since(start);
    compare_multiset(o, 8, entries);
    const auto catalog = polys_of(entries);
    pinned(o, "K4+K4", disjoint_union(complete_graph(4), complete_graph(4)), cubic_poly(8, {8, 12, 8, 2}), catalog);
    pinned(o, "P2xC4", cartesian_product(path_graph(2), cycle_graph(4)), cubic_poly(8, {8, 128, 30, 1}), catalog);
    o.require(t < budget_order8, "took " + std::to_string(t) + " s");
    o.detail << "; pinned rows checked; " << t << " s";
    return o;
}

outcome criterion_3() {
    outcome o;
    const auto start = clock_type::now();
    const auto entries = enumerate_regular(10, 3, false);
    const auto catalog = polys_of(entries);
    pinned(o, "K4+K33", disjoint_union(complete_graph(4), complete_bipartite_graph(3, 3)),
           cubic_poly(10, {10, 39, 19, 2}), catalog);
    pinned(o, "K4+prism", disjoint_union(complete_graph(4), cartesian_product(path_graph(2), cycle_graph(3))),
           cubic_poly(10, {10, 39, 15, 2}), catalog);
    compare_multiset(o, 10, entries);
    const double t = seconds_since(start);
    o.require(t < budget_order10, "took " + std::to_string(t) + " s");
    o.detail << "\n      pinned rows checked; " << t << " s";
    return o;
}

outcome criterion_4() {
    outcome o;
    for (int order : reference_orders) {
        const auto entries = enumerate_regular(order, 3, false);
        std::set<polynomial> polys;
        std::set<rational> values;
        for (const auto& e : entries) {
            polys.insert(e.poly);
            values.insert(evaluate(e.poly, rational(1)));
        }
        o.require(polys.size() == entries.size(), "order " + std::to_string(order) + " polynomial collision");
        o.require(values.size() == entries.size(), "order " + std::to_string(order) + " A(G;1) collision");
        o.detail << " order " << order << ": " << polys.size() << " polys, " << values.size() << " values;";
    }
    return o;
}

outcome criterion_5() {
    outcome o;
    int regular = 0;
    for (int n = 1; n <= 9; ++n) {
        for (int d = 0; d < n; ++d) {
            if ((n * d) % 2 != 0) continue;
            for (const auto& e : enumerate_regular(n, d, false)) {
                ++regular;
                if (alliance_polynomial(e.representative) != alliance_polynomial_naive(e.representative)) {
                    o.require(false, "regular " + encode_graph6(e.representative));
                }
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (int i = 0; i < random_equivalence_graphs; ++i) {
        const graph g = testing::random_graph(order(rng), density(rng), rng);
        if (alliance_polynomial(g) != alliance_polynomial_naive(g)) o.require(false, "random " + encode_graph6(g));
    }
    o.detail << " " << regular << " regular graphs (n <= 9), " << random_equivalence_graphs << " random graphs (n <= 12)";
    return o;
}

outcome criterion_6() {
    outcome o;
    const auto start = clock_type::now();
    int general = 0, general_failures = 0;
    std::vector<std::size_t> class_counts;
    for (int n = 1; n <= exhaustive_limit; ++n) {
        const auto entries = enumerate_all_graphs(n);
        class_counts.push_back(entries.size());
        for (const auto& e : entries) {
            ++general;
            general_failures += check_general(e.representative, e.poly).failures();
        }
    }
    o.require(class_counts.back() == 1044, "n=7 classes = " + std::to_string(class_counts.back()));
    int regular = 0, regular_failures = 0;
    for (int n = 1; n <= 9; ++n) {
        for (int d = 0; d < n; ++d) {
            if ((n * d) % 2 != 0) continue;
            for (const auto& e : enumerate_regular(n, d, false)) {
                ++regular;
                regular_failures += check_regular(e.representative, e.poly).failures();
            }
        }
    }
    int cubic = 0, cubic_failures = 0;
    for (int n : reference_orders) {
        for (const auto& e : enumerate_regular(n, 3, false)) {
            ++cubic;
            cubic_failures += check_cubic(e.representative, e.poly).failures();
        }
    }
    const double t = seconds_since(start);
    o.require(general_failures == 0, std::to_string(general_failures) + " general failures");
    o.require(regular_failures == 0, std::to_string(regular_failures) + " regular failures");
    o.require(cubic_failures == 0, std::to_string(cubic_failures) + " cubic failures");
    o.require(t < budget_invariants, "took " + std::to_string(t) + " s");
    o.detail << " general on " << general << " classes (" << class_counts.back() << " at n=7), regular on " << regular
             << ", cubic on " << cubic << "; " << t << " s";
    return o;
}

outcome criterion_7() {
    outcome o;
    int exact_cases = 0, bounded_cases = 0;
    for (int d : {3, 4, 5}) {
        for (int n = d + 1; n <= 2 * d + 1; ++n) {
            if ((n * d) % 2 != 0) continue;
            for (const auto& e : enumerate_regular(n, d, false)) {
                const big_int a = e.poly.coefficient(d - 2);
                const std::string tag = std::to_string(d) + "-regular " + encode_graph6(e.representative);
                if (n < 2 * d) {
                    ++exact_cases;
                    o.require(a == n, tag + " A=" + a.str());
                } else {
                    ++bounded_cases;
                    const int m = e.representative.size();
                    o.require(n <= a && a <= n + m + 2, tag + " A=" + a.str());
                }
            }
        }
    }
    const auto k33 = alliance_polynomial(complete_bipartite_graph(3, 3));
    const auto prism = alliance_polynomial(cartesian_product(path_graph(2), cycle_graph(3)));
    o.require(k33.coefficient(1) == 15, "A_1(K33)=" + k33.coefficient(1).str());
    o.require(prism.coefficient(1) == 11, "A_1(prism)=" + prism.coefficient(1).str());
    o.detail << " A_{delta-2} = n on " << exact_cases << " graphs, n <= A_{delta-2} <= n+m+2 on " << bounded_cases
             << " graphs; A_1(K33)=15, A_1(prism)=11";
    return o;
}

outcome criterion_8() {
    outcome o;
    std::map<polynomial, std::vector<graph>> by_poly;
    int classes = 0;
    for (int n = 1; n <= exhaustive_limit; ++n) {
        for (const auto& e : enumerate_all_graphs(n)) {
            by_poly[e.poly].push_back(e.representative);
            ++classes;
        }
    }
    int shared = 0, violations = 0;
    for (const auto& [p, members] : by_poly) {
        if (members.size() < 2) continue;
        ++shared;
        for (const auto& g : members) {
            const auto d = g.regular_degree();
            if (!d || *d > 3) continue;
            for (const auto& h : members) {
                if (h.regular_degree() != d) {
                    ++violations;
                    o.require(false, encode_graph6(g) + " vs " + encode_graph6(h));
                }
            }
        }
    }
    o.detail << " " << classes << " classes, " << by_poly.size() << " polynomials, " << shared
             << " shared polynomials, " << violations << " violations";
    return o;
}

outcome criterion_9() {
    outcome o;
    std::mt19937_64 rng(seed + 9);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < random_union_pairs; ++i) {
        const int total = std::uniform_int_distribution<int>(2, 20)(rng);
        const int ng = std::uniform_int_distribution<int>(1, total - 1)(rng);
        const graph g = testing::random_graph(ng, density(rng), rng);
        const graph h = testing::random_graph(total - ng, density(rng), rng);
        const polynomial pg = alliance_polynomial(g);
        const polynomial ph = alliance_polynomial(h);
        std::map<int, big_int> expected;
        for (const auto& [e, c] : pg.terms()) expected[e + h.order()] += c;
        for (const auto& [e, c] : ph.terms()) expected[e + g.order()] += c;
        const polynomial pu = alliance_polynomial(disjoint_union(g, h));
        if (pu.terms() != expected) o.require(false, encode_graph6(g) + " + " + encode_graph6(h));
    }
    o.detail << " " << random_union_pairs << " random pairs, n_G + n_H <= 20";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<outcome()>>> criteria{
        {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4}, {5, criterion_5},
        {6, criterion_6}, {7, criterion_7}, {8, criterion_8}, {9, criterion_9},
    };
    int failed = 0;
    for (const auto& [id, run] : criteria) {
        outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " -" << o.detail.str() << std::endl;
    }
    std::cout << (9 - failed) << "/9 criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
