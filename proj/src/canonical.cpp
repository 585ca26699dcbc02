#include "alliance/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "alliance/error.hpp"
#include "alliance/graph_io.hpp"

namespace alliance {

std::vector<int> refine_colors(const graph& g) {
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> signature(n);
        for (int v = 0; v < n; ++v) {
            signature[v].push_back(color[v]);
            std::vector<int> around;
            for (int u : g.neighbors(v)) around.push_back(color[u]);
            std::sort(around.begin(), around.end());
            signature[v].insert(signature[v].end(), around.begin(), around.end());
        }
        std::vector<std::vector<int>> distinct = signature;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v) {
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                        distinct.begin());
        }
        const int now = static_cast<int>(distinct.size());
        if (now == classes) break;
        classes = now;
    }
    return color;
}

namespace {

class labeler {
public:
    explicit labeler(const graph& g) : g_(g), n_(g.order()), color_(refine_colors(g)) {
        slot_color_ = color_;
        std::sort(slot_color_.begin(), slot_color_.end());
        placed_.resize(n_);
        column_.resize(n_);
        best_column_.resize(n_);
        best_order_.resize(n_);
    }

    std::vector<int> run() {
        search(0, vertex_set{});
        std::vector<int> perm(n_);
        for (int pos = 0; pos < n_; ++pos) perm[best_order_[pos]] = pos;
        return perm;
    }

private:
    // Column `pos` of the relabelled upper triangle if `u` takes that slot;
    // placed_[0] is the most significant bit.
    std::uint64_t column_key(int u, int pos) const {
        std::uint64_t key = 0;
        for (int i = 0; i < pos; ++i) key = (key << 1) | (g_.adjacent(placed_[i], u) ? 1u : 0u);
        return key;
    }

    bool twins(int u, int w) const {
        const vertex_set pair{u, w};
        return g_.neighbors(u).minus(pair) == g_.neighbors(w).minus(pair);
    }

    // Sign of the comparison between the current prefix and the best one, up to `pos`.
    int compare_prefix(int pos) const {
        for (int i = 0; i < pos; ++i) {
            if (column_[i] != best_column_[i]) return column_[i] > best_column_[i] ? 1 : -1;
        }
        return 0;
    }

    void search(int pos, vertex_set used) {
        const int cmp = have_best_ ? compare_prefix(pos) : 1;
        if (cmp < 0) return;
        if (pos == n_) {
            if (cmp > 0) {
                best_column_ = column_;
                best_order_ = placed_;
                have_best_ = true;
            }
            return;
        }
        std::vector<int> candidates;
        std::uint64_t top = 0;
        for (int u = 0; u < n_; ++u) {
            if (used.contains(u) || color_[u] != slot_color_[pos]) continue;
            const std::uint64_t key = column_key(u, pos);
            if (candidates.empty() || key > top) {
                candidates.assign(1, u);
                top = key;
            } else if (key == top) {
                candidates.push_back(u);
            }
        }
        if (cmp == 0 && top < best_column_[pos]) return;
        // Swapping twins is an automorphism that fixes every placed vertex.
        std::vector<int> distinct;
        for (int u : candidates) {
            if (std::none_of(distinct.begin(), distinct.end(), [&](int w) { return twins(u, w); })) {
                distinct.push_back(u);
            }
        }
        column_[pos] = top;
        for (int u : distinct) {
            placed_[pos] = u;
            search(pos + 1, used | vertex_set::single(u));
        }
    }

    const graph& g_;
    int n_;
    std::vector<int> color_;
    std::vector<int> slot_color_;
    std::vector<int> placed_;
    std::vector<std::uint64_t> column_;
    std::vector<std::uint64_t> best_column_;
    std::vector<int> best_order_;
    bool have_best_ = false;
};

}  // namespace

std::vector<int> canonical_labeling(const graph& g, int limit) {
    if (g.order() > limit) {
        throw error(errc::order_exceeds_canonical_limit, "order " + std::to_string(g.order()) +
                                                             " exceeds the canonical limit " +
                                                             std::to_string(limit));
    }
    return labeler(g).run();
}

graph canonical_graph(const graph& g, int limit) {
    return g.relabeled(canonical_labeling(g, limit));
}

canonical_form canonical_form_of(const graph& g, int limit) {
    return canonical_form{encode_graph6(canonical_graph(g, limit))};
}

}  // namespace alliance
