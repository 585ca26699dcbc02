#include "alliance/catalog.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "alliance/enumerate.hpp"
#include "alliance/error.hpp"
#include "alliance/generators.hpp"

namespace alliance {

std::string_view to_string(entry_source s) noexcept {
    return s == entry_source::generated ? "generated" : "named";
}

catalog_entry make_entry(const graph& g, entry_source source, const catalog_options& options) {
    graph rep = canonical_graph(g, options.canonical_limit);
    catalog_entry entry{canonical_form{}, rep, alliance_polynomial(rep, options.workers), is_connected(rep),
                        source};
    entry.canonical = canonical_form_of(rep, options.canonical_limit);
    return entry;
}

namespace {

std::vector<catalog_entry> entries_from(const std::map<canonical_form, graph>& classes,
                                        const catalog_options& options) {
    std::vector<catalog_entry> out;
    out.reserve(classes.size());
    for (const auto& [form, rep] : classes) {
        out.push_back(catalog_entry{form, rep, alliance_polynomial(rep, options.workers), is_connected(rep),
                                    entry_source::generated});
    }
    return out;
}

// Backtracking over the rows of a degree-regular graph. Vertex u picks its
// missing neighbours among higher-indexed vertices. Vertices with no edges yet
// are interchangeable, so u may only take a prefix of them; in particular
// vertex 0 always receives {1, ..., degree}.
class regular_builder {
public:
    regular_builder(int n, int degree, int canonical_limit)
        : n_(n), degree_(degree), canonical_limit_(canonical_limit), rows_(n) {}

    std::map<canonical_form, graph> run() {
        row(0);
        return std::move(classes_);
    }

private:
    int deficit(int v) const { return degree_ - rows_[v].size(); }

    bool feasible_after(int u) const {
        for (int w = u + 1; w < n_; ++w) {
            const int need = deficit(w);
            if (need == 0) continue;
            int partners = 0;
            for (int x = u + 1; x < n_; ++x) {
                if (x != w && deficit(x) > 0 && !rows_[w].contains(x)) ++partners;
            }
            if (partners < need) return false;
        }
        return true;
    }

    void row(int u) {
        if (u == n_) {
            graph g = graph::from_rows(rows_);
            canonical_form form = canonical_form_of(g, canonical_limit_);
            classes_.try_emplace(std::move(form), canonical_graph(g, canonical_limit_));
            return;
        }
        if (deficit(u) == 0) {
            if (feasible_after(u)) row(u + 1);
            return;
        }
        std::vector<int> candidates;
        std::vector<bool> untouched;
        for (int v = u + 1; v < n_; ++v) {
            if (deficit(v) > 0) {
                candidates.push_back(v);
                untouched.push_back(rows_[v].empty());
            }
        }
        choose(u, candidates, untouched, 0, deficit(u), false);
    }

    void choose(int u, const std::vector<int>& candidates, const std::vector<bool>& untouched,
                std::size_t index, int missing, bool skipped_untouched) {
        if (missing == 0) {
            if (feasible_after(u)) row(u + 1);
            return;
        }
        if (candidates.size() - index < static_cast<std::size_t>(missing)) return;
        const int v = candidates[index];
        const bool fresh = untouched[index];
        if (!(fresh && skipped_untouched)) {
            rows_[u].insert(v);
            rows_[v].insert(u);
            choose(u, candidates, untouched, index + 1, missing - 1, skipped_untouched);
            rows_[u].erase(v);
            rows_[v].erase(u);
        }
        choose(u, candidates, untouched, index + 1, missing, skipped_untouched || fresh);
    }

    int n_;
    int degree_;
    int canonical_limit_;
    std::vector<vertex_set> rows_;
    std::map<canonical_form, graph> classes_;
};

}  // namespace

std::vector<catalog_entry> enumerate_regular(int n, int degree, bool connected_only,
                                             const catalog_options& options) {
    if (n < 1 || degree < 0 || degree >= n || (n * degree) % 2 != 0) {
        throw error(errc::infeasible_params, "no " + std::to_string(degree) + "-regular graph on " +
                                                 std::to_string(n) + " vertices");
    }
    if (n > options.canonical_limit) {
        throw error(errc::order_exceeds_canonical_limit, "order " + std::to_string(n) +
                                                             " exceeds the canonical limit " +
                                                             std::to_string(options.canonical_limit));
    }
    auto entries = entries_from(regular_builder(n, degree, options.canonical_limit).run(), options);
    if (connected_only) std::erase_if(entries, [](const catalog_entry& e) { return !e.connected; });
    return entries;
}

std::vector<catalog_entry> enumerate_all_graphs(int n, const catalog_options& options) {
    if (n < 1 || n > exhaustive_limit) {
        throw error(n < 1 ? errc::order_out_of_range : errc::order_exceeds_exhaustive_limit,
                    "exhaustive enumeration needs 1 <= n <= " + std::to_string(exhaustive_limit));
    }
    // Every graph on k vertices is a graph on k - 1 vertices plus one more vertex,
    // so extending each smaller class by every neighbourhood reaches all classes.
    std::map<canonical_form, graph> classes;
    classes.emplace(canonical_form_of(complete_graph(1)), complete_graph(1));
    for (int k = 2; k <= n; ++k) {
        std::map<canonical_form, graph> next;
        for (const auto& [form, smaller] : classes) {
            std::vector<vertex_set> rows(smaller.rows().begin(), smaller.rows().end());
            rows.emplace_back();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                std::vector<vertex_set> extended = rows;
                extended[k - 1] = vertex_set(mask);
                for (int v : vertex_set(mask)) extended[v].insert(k - 1);
                graph g = graph::from_rows(std::move(extended));
                auto canon = canonical_form_of(g, options.canonical_limit);
                if (!next.contains(canon)) next.emplace(std::move(canon), canonical_graph(g, options.canonical_limit));
            }
        }
        classes = std::move(next);
    }
    return entries_from(classes, options);
}

std::vector<catalog_entry> pool_entries(std::vector<std::vector<catalog_entry>> parts) {
    std::vector<catalog_entry> out;
    std::set<canonical_form> seen;
    for (auto& part : parts) {
        for (auto& entry : part) {
            if (seen.insert(entry.canonical).second) out.push_back(std::move(entry));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const catalog_entry& a, const catalog_entry& b) { return a.canonical < b.canonical; });
    return out;
}

collision_report distinguish(const std::vector<catalog_entry>& entries) {
    std::map<polynomial::term_map, std::vector<std::size_t>> by_poly;
    std::map<big_int, std::vector<std::size_t>> by_value;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        by_poly[entries[i].poly.terms()].push_back(i);
        big_int total = 0;
        for (const auto& [e, c] : entries[i].poly.terms()) total += c;
        by_value[total].push_back(i);
    }
    collision_report report;
    for (auto& [key, group] : by_poly)
        if (group.size() > 1) report.by_polynomial.push_back(std::move(group));
    for (auto& [key, group] : by_value)
        if (group.size() > 1) report.by_evaluation_at_one.push_back(std::move(group));
    return report;
}

std::vector<regularity_violation> regularity_violations(const std::vector<catalog_entry>& entries,
                                                        const collision_report& report) {
    struct profile {
        int n, m, components;
        std::optional<int> degree;
        bool operator==(const profile&) const = default;
    };
    auto profile_of = [&](std::size_t i) {
        const graph& g = entries[i].representative;
        return profile{g.order(), g.size(), static_cast<int>(connected_components(g).size()),
                       g.regular_degree()};
    };

    std::vector<regularity_violation> out;
    for (const auto& group : report.by_polynomial) {
        for (std::size_t a = 0; a < group.size(); ++a) {
            const profile pa = profile_of(group[a]);
            if (!pa.degree) continue;
            for (std::size_t b = 0; b < group.size(); ++b) {
                if (a == b) continue;
                const profile pb = profile_of(group[b]);
                if (pa == pb) continue;
                std::string reason;
                if (*pa.degree <= 3) {
                    reason = std::to_string(*pa.degree) + "-regular " + entries[group[a]].canonical.bytes +
                             " shares its polynomial with " + entries[group[b]].canonical.bytes +
                             ", which differs in regularity, order, size or components";
                } else if (pb.degree) {
                    reason = "regular graphs " + entries[group[a]].canonical.bytes + " and " +
                             entries[group[b]].canonical.bytes +
                             " share a polynomial but differ in order, size, degree or components";
                } else {
                    continue;
                }
                out.push_back({group, reason});
            }
        }
    }
    return out;
}

}  // namespace alliance
