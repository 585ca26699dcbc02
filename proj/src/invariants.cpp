#include "alliance/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "alliance/error.hpp"
#include "json.hpp"

namespace alliance {

std::string_view to_string(check_status s) noexcept {
    switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::not_applicable: return "not_applicable";
    }
    return "unknown";
}

int invariant_report::count(check_status s) const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [s](const check_entry& e) { return e.status == s; }));
}

const check_entry* invariant_report::find(std::string_view id) const {
    auto it = std::find_if(entries.begin(), entries.end(), [id](const check_entry& e) { return e.id == id; });
    return it == entries.end() ? nullptr : &*it;
}

void invariant_report::append(const invariant_report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::string render_report_json(const invariant_report& report) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json row;
        row["check_id"] = e.id;
        row["status"] = to_string(e.status);
        row["witness"] = e.witness;
        out.push_back(std::move(row));
    }
    return out.dump();
}

std::string render_report_table(const invariant_report& report) {
    std::size_t width = 8;
    for (const auto& e : report.entries) width = std::max(width, e.id.size());
    std::ostringstream out;
    for (const auto& e : report.entries) {
        out << e.id << std::string(width - e.id.size() + 2, ' ');
        const auto status = to_string(e.status);
        out << status << std::string(16 - status.size(), ' ') << e.witness << '\n';
    }
    return out.str();
}

subset_census census_connected_subsets(const graph& g) {
    subset_census census;
    census.by_min_internal_degree.assign(g.max_degree() + 1, 0);
    const std::uint64_t all = g.vertices().mask();
    for (std::uint64_t mask = 1;; ++mask) {
        const vertex_set s(mask);
        if (is_connected_subset(g, s)) {
            ++census.connected;
            int lowest = max_order;
            for (int v : s) lowest = std::min(lowest, (g.neighbors(v) & s).size());
            ++census.by_min_internal_degree[lowest];
        }
        if (mask == all) break;
    }
    return census;
}

bool is_unimodal(const std::vector<big_int>& seq) {
    std::size_t i = 1;
    while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
    while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
    return i >= seq.size();
}

namespace {

std::string str(const big_int& v) { return v.str(); }
std::string str(int v) { return std::to_string(v); }

class report_builder {
public:
    void add(std::string id, bool ok, std::string witness) {
        report_.entries.push_back({std::move(id), ok ? check_status::pass : check_status::fail, std::move(witness)});
    }
    void skip(std::string id, std::string why) {
        report_.entries.push_back({std::move(id), check_status::not_applicable, std::move(why)});
    }
    invariant_report take() { return std::move(report_); }

private:
    invariant_report report_;
};

void require_match(const graph& g, const polynomial& p) {
    if (p.order() != g.order() || p.max_degree() != g.max_degree()) {
        throw error(errc::polynomial_graph_mismatch,
                    "polynomial carries n=" + str(p.order()) + ", delta=" + str(p.max_degree()) +
                        " but the graph has n=" + str(g.order()) + ", delta=" + str(g.max_degree()));
    }
}

std::string exponent_list(const polynomial& p) {
    std::string out;
    for (const auto& [e, c] : p.terms()) out += (out.empty() ? "" : ",") + str(e);
    return "{" + out + "}";
}

big_int binomial(int n, int k) {
    big_int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

invariant_report check_general(const graph& g, const polynomial& p, const invariant_options& options) {
    require_match(g, p);
    report_builder out;
    const int n = g.order();
    const int delta = g.max_degree();
    const int low = g.min_degree();

    {
        bool ok = true;
        std::string witness = "all coefficients >= 1";
        for (const auto& [e, c] : p.terms()) {
            if (c < 1) {
                ok = false;
                witness = "coefficient of x^" + str(e) + " is " + str(c);
            }
        }
        for (const rational& x : {rational(1, 2), rational(1), rational(2)}) {
            if (evaluate(p, x) <= 0) {
                ok = false;
                witness = "A(G;" + x.str() + ") <= 0";
            }
        }
        out.add("general.positive_coefficients", ok, witness);
    }

    if (n <= options.brute_force_limit) {
        const big_int oracle = census_connected_subsets(g).connected;
        const rational at_one = evaluate(p, 1);
        const big_int bound = big_int(1) << n;
        out.add("general.connected_subgraph_count", at_one == rational(oracle) && at_one < rational(bound),
                "A(G;1)=" + at_one.str() + ", brute force=" + str(oracle) + ", 2^n=" + str(bound));
    } else {
        out.skip("general.connected_subgraph_count", "order " + str(n) + " above brute-force limit");
    }

    const auto seq = degree_sequence_of(g);
    if (g.size() >= 1) {
        out.add("general.term_count", p.term_count() >= seq.distinct_values + 1,
                str(p.term_count()) + " terms, " + str(seq.distinct_values) + " distinct degrees");
    } else {
        out.skip("general.term_count", "no edges");
    }

    {
        const bool one_parity = std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) {
            return (t.first - p.min_degree()) % 2 == 0;
        });
        const bool all_odd = std::all_of(seq.degrees.begin(), seq.degrees.end(), [](int d) { return d % 2 == 1; });
        const bool all_even = std::all_of(seq.degrees.begin(), seq.degrees.end(), [](int d) { return d % 2 == 0; });
        out.add("general.parity_symmetry", one_parity == (all_odd || all_even),
                std::string(one_parity ? "symmetric" : "not symmetric") + ", exponents " + exponent_list(p) +
                    ", degrees " + (all_odd ? "all odd" : all_even ? "all even" : "mixed parity"));
    }

    {
        int at_max = 0, below_max = 0;
        for (int d : seq.degrees) {
            at_max += d == delta;
            below_max += d == delta - 1;
        }
        const big_int a_low = p.at_exponent(n - delta);
        const big_int a_next = p.at_exponent(n - delta + 1);
        out.add("general.low_coefficients", a_low == at_max && a_next == below_max,
                "A_-delta=" + str(a_low) + " vs " + str(at_max) + " vertices of degree delta; A_-delta+1=" +
                    str(a_next) + " vs " + str(below_max) + " of degree delta-1");
    }

    {
        int regular_components = 0;
        for (vertex_set comp : connected_components(g)) {
            const bool full = std::all_of(comp.begin(), comp.end(), [&](int v) { return g.degree(v) == delta; });
            regular_components += full;
        }
        const big_int top = p.at_exponent(n + delta);
        out.add("general.top_coefficient", top == regular_components,
                "A_delta=" + str(top) + ", delta-regular components=" + str(regular_components));
    }

    out.add("general.degree_bounds", p.degree() >= n + low && p.degree() <= n + delta,
            "Deg=" + str(p.degree()) + " in [" + str(n + low) + ", " + str(n + delta) + "]");

    if (is_connected(g)) {
        const bool regular = g.regular_degree().has_value();
        const big_int top = p.at_exponent(n + delta);
        out.add("general.connected_regular_iff_top_one", regular == (top == 1),
                std::string(regular ? "regular" : "not regular") + ", A_delta=" + str(top));
    } else {
        out.skip("general.connected_regular_iff_top_one", "graph is disconnected");
    }
    return out.take();
}

invariant_report check_regular(const graph& g, const polynomial& p, const invariant_options& options) {
    const auto degree = g.regular_degree();
    if (!degree) throw error(errc::not_regular, "degrees range over [" + str(g.min_degree()) + ", " + str(g.max_degree()) + "]");
    require_match(g, p);
    report_builder out;
    const int n = g.order();
    const int m = g.size();
    const int delta = *degree;
    auto a = [&](int k) { return p.at_exponent(n + k); };

    if (n <= options.brute_force_limit) {
        const auto census = census_connected_subsets(g);
        bool ok = true;
        std::string witness = "A_{-delta+2i} = #connected induced subgraphs with min degree i, i=0.." + str(delta);
        for (int i = 0; i <= delta; ++i) {
            if (a(-delta + 2 * i) != census.by_min_internal_degree[i]) {
                ok = false;
                witness = "i=" + str(i) + ": A_" + str(-delta + 2 * i) + "=" + str(a(-delta + 2 * i)) +
                          ", brute force=" + str(census.by_min_internal_degree[i]);
                break;
            }
        }
        out.add("regular.min_degree_counts", ok, witness);
    } else {
        out.skip("regular.min_degree_counts", "order " + str(n) + " above brute-force limit");
    }

    out.add("regular.lowest_term", p.min_degree() == n - delta && a(-delta) == n,
            "Deg_min=" + str(p.min_degree()) + ", A_-delta=" + str(a(-delta)) + ", n=" + str(n));

    {
        const int top = p.degree();
        const int bottom = p.min_degree();
        const bool ok = top == n + delta && bottom + top == 2 * n && a(-delta) * (top - bottom) == 4 * m &&
                        top * top - bottom * bottom == 8 * m;
        out.add("regular.order_size_recovery", ok,
                "Deg=" + str(top) + ", Deg_min=" + str(bottom) + ", n=" + str(n) + ", m=" + str(m));
    }

    {
        const big_int top = a(delta);
        const bool connected = is_connected(g);
        const bool ok = top >= 1 && top * (delta + 1) <= n && connected == (top == 1);
        out.add("regular.top_coefficient", ok,
                "A_delta=" + str(top) + ", n/(delta+1)=" + str(n) + "/" + str(delta + 1) +
                    (connected ? ", connected" : ", disconnected"));
    }

    if (delta > 0) {
        const int cuts = cut_vertices(g).size();
        const bool ok = a(-delta + 2) >= m && a(delta - 2) >= n + cuts;
        out.add("regular.second_coefficients", ok,
                "A_" + str(-delta + 2) + "=" + str(a(-delta + 2)) + " >= m=" + str(m) + "; A_" + str(delta - 2) +
                    "=" + str(a(delta - 2)) + " >= n+n0=" + str(n + cuts));
    } else {
        out.skip("regular.second_coefficients", "delta = 0");
    }

    {
        const bool ok = std::all_of(p.terms().begin(), p.terms().end(),
                                    [&](const auto& t) { return (t.first - n - delta) % 2 == 0; });
        out.add("regular.parity", ok,
                std::string((n + delta) % 2 == 0 ? "even" : "odd") + " expected, exponents " + exponent_list(p));
    }

    {
        const bool positive = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second >= 1; });
        out.add("regular.real_zero_multiplicity", positive && p.min_degree() == n - delta,
                "zero at x=0 with multiplicity " + str(p.min_degree()) + ", n-delta=" + str(n - delta));
    }

    {
        bool ok = p.term_count() == delta + 1;
        for (int i = 0; i <= delta && ok; ++i) ok = a(delta - 2 * i) >= 1;
        out.add("regular.term_count", ok, str(p.term_count()) + " terms, delta+1=" + str(delta + 1));
    }

    if (delta >= 2) {
        bool ok = true;
        std::string witness = "A_{delta-2i} * min(delta, n-i) >= n*C(delta,i) for 1 <= i <= delta-1";
        for (int i = 1; i <= delta - 1; ++i) {
            const big_int lhs = a(delta - 2 * i) * std::min(delta, n - i);
            const big_int rhs = n * binomial(delta, i);
            if (lhs < rhs) {
                ok = false;
                witness = "i=" + str(i) + ": A_" + str(delta - 2 * i) + "=" + str(a(delta - 2 * i)) + " < " + str(rhs) +
                          "/" + str(std::min(delta, n - i));
                break;
            }
        }
        out.add("regular.coefficient_lower_bounds", ok, witness);
    } else {
        out.skip("regular.coefficient_lower_bounds", "needs delta >= 2");
    }

    if (n < 2 * delta) {
        out.add("regular.dense_second_coefficient", a(delta - 2) == n,
                "n=" + str(n) + " < 2delta=" + str(2 * delta) + ", A_" + str(delta - 2) + "=" + str(a(delta - 2)));
    } else {
        out.skip("regular.dense_second_coefficient", "needs n < 2delta");
    }

    if (delta >= 3 && 2 * delta <= n && n <= 2 * delta + 1) {
        const big_int value = a(delta - 2);
        out.add("regular.near_dense_second_coefficient", value >= n && value <= n + m + 2,
                str(n) + " <= A_" + str(delta - 2) + "=" + str(value) + " <= " + str(n + m + 2));
    } else {
        out.skip("regular.near_dense_second_coefficient", "needs delta >= 3 and 2delta <= n <= 2delta+1");
    }
    return out.take();
}

invariant_report check_cubic(const graph& g, const polynomial& p) {
    if (g.regular_degree() != 3) throw error(errc::not_cubic, "graph is not 3-regular");
    require_match(g, p);
    report_builder out;
    const int n = g.order();
    const int m = g.size();
    const std::vector<big_int> a{p.at_exponent(n - 3), p.at_exponent(n - 1), p.at_exponent(n + 1), p.at_exponent(n + 3)};
    const std::string seq = "(" + str(a[0]) + ", " + str(a[1]) + ", " + str(a[2]) + ", " + str(a[3]) + ")";

    out.add("cubic.four_terms",
            p.term_count() == 4 && std::all_of(a.begin(), a.end(), [](const big_int& c) { return c >= 1; }),
            "exponents " + exponent_list(p) + ", expected {" + str(n - 3) + "," + str(n - 1) + "," + str(n + 1) +
                "," + str(n + 3) + "}");
    out.add("cubic.coefficient_chain", a[0] == n && n < m && m <= a[1] && a[2] >= a[3],
            "A_-3=" + str(a[0]) + " = n=" + str(n) + " < m=" + str(m) + " <= A_-1=" + str(a[1]) + "; A_1=" + str(a[2]) +
                " >= A_3=" + str(a[3]));
    out.add("cubic.unimodal", is_unimodal(a), seq);
    return out.take();
}

invariant_report check_all(const graph& g, const polynomial& p, const invariant_options& options) {
    invariant_report report = check_general(g, p, options);
    if (g.regular_degree()) report.append(check_regular(g, p, options));
    if (g.regular_degree() == 3) report.append(check_cubic(g, p));
    return report;
}

}  // namespace alliance
