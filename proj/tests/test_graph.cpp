#include <random>

#include "alliance/error.hpp"
#include "alliance/generators.hpp"
#include "alliance/graph.hpp"
#include "alliance/graph_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace alliance;

namespace {

errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an alliance::error");
    return errc::bad_params;
}

int component_count_without(const graph& g, int v) {
    return static_cast<int>(connected_components(g.induced(g.vertices().minus(vertex_set::single(v)))).size());
}

}  // namespace

TEST_CASE("vertex_set algebra") {
    vertex_set s{0, 3, 5};
    CHECK(s.size() == 3);
    CHECK(s.lowest() == 0);
    CHECK(s.highest() == 5);
    CHECK(s.complement(6) == vertex_set{1, 2, 4});
    CHECK((s | vertex_set{1}) == vertex_set{0, 1, 3, 5});
    CHECK((s & vertex_set{3, 4}) == vertex_set{3});
    CHECK(vertex_set::first(64).size() == 64);
    std::vector<int> members(s.begin(), s.end());
    CHECK(members == std::vector<int>{0, 3, 5});
    CHECK(s.to_string() == "{0,3,5}");
}

TEST_CASE("from_edge_list") {
    const graph k4 = graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    CHECK(k4 == complete_graph(4));

    const graph two = graph::from_edge_list(2, {});
    CHECK(two.size() == 0);
    CHECK(two.max_degree() == 0);

    CHECK(graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}}).size() == 1);

    CHECK(code_of([] { graph::from_edge_list(3, {{0, 0}}); }) == errc::loop_edge);
    CHECK(code_of([] { graph::from_edge_list(0, {}); }) == errc::order_out_of_range);
    CHECK(code_of([] { graph::from_edge_list(65, {}); }) == errc::order_out_of_range);
    CHECK(code_of([] { graph::from_edge_list(3, {{0, 3}}); }) == errc::vertex_out_of_range);
}

TEST_CASE("graph6 examples") {
    const graph k4 = parse_graph6("C~");
    CHECK(k4 == complete_graph(4));
    CHECK(encode_graph6(k4) == "C~");
    CHECK(encode_graph6(complete_graph(1)) == "@");
    CHECK(parse_graph6("@").order() == 1);

    const std::string c5 = encode_graph6(cycle_graph(5));
    CHECK(c5.size() == 3);
    CHECK(c5 == "Dhc");
    CHECK(parse_graph6(c5) == cycle_graph(5));

    CHECK(parse_graph6("C~\n") == k4);
    CHECK(parse_graph6(">>graph6<<C~") == k4);

    CHECK(code_of([] { parse_graph6("C~extra"); }) == errc::trailing_garbage);
    CHECK(code_of([] { parse_graph6("D"); }) == errc::truncated_bit_vector);
    CHECK(code_of([] { parse_graph6(""); }) == errc::malformed_header);
    CHECK(code_of([] { parse_graph6(" ~"); }) == errc::malformed_header);
    CHECK(code_of([] { parse_graph6("C "); }) == errc::invalid_byte);
    CHECK(code_of([] { parse_graph6("~?@"); }) == errc::order_too_large_for_format);
    CHECK(code_of([] { encode_graph6(empty_graph(63)); }) == errc::order_too_large_for_format);
}

TEST_CASE("graph6 round trip on random labelled graphs") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const graph g = testing::random_graph(n, 0.3, rng);
        const std::string text = encode_graph6(g);
        CHECK(text.size() == 1 + (n * (n - 1) / 2 + 5) / 6);
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("edge list format") {
    const graph g = parse_edge_list("# triangle plus pendant\n4 4\n0 1\n1 2 # inline\n2 0\n2 3\n");
    CHECK(g.size() == 4);
    CHECK(g.degree(2) == 3);
    CHECK(parse_edge_list(write_edge_list(petersen_graph())) == petersen_graph());
    CHECK(code_of([] { parse_edge_list("3 2\n0 1\n"); }) == errc::malformed_edge_list);
    CHECK(code_of([] { parse_edge_list("3 1\n0 x\n"); }) == errc::malformed_edge_list);
    CHECK(code_of([] { parse_edge_list("3 1\n0 3\n"); }) == errc::vertex_out_of_range);
    CHECK(code_of([] { parse_edge_list("3 1\n1 1\n"); }) == errc::loop_edge);
    CHECK(code_of([] { parse_edge_list(""); }) == errc::malformed_edge_list);
}

TEST_CASE("named generators") {
    const graph k33 = complete_bipartite_graph(3, 3);
    CHECK(k33.order() == 6);
    CHECK(k33.size() == 9);
    CHECK(k33.regular_degree() == 3);

    const graph pet = petersen_graph();
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    CHECK(pet.regular_degree() == 3);
    // girth 5: no triangle and no 4-cycle means every pair shares at most one neighbour
    for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) {
            CHECK((pet.neighbors(u) & pet.neighbors(v)).size() <= 1);
            if (pet.adjacent(u, v)) CHECK((pet.neighbors(u) & pet.neighbors(v)).empty());
        }
    }
    CHECK(is_connected(pet));

    CHECK(code_of([] { cycle_graph(2); }) == errc::bad_params);
    CHECK(code_of([] { path_graph(0); }) == errc::bad_params);
    const int bad[] = {3};
    CHECK(code_of([&] { generate_named(family::complete_bipartite, bad); }) == errc::bad_params);
    const int five[] = {5};
    CHECK(generate_named(family::cycle, five) == cycle_graph(5));
    CHECK(generate_named(family::petersen, {}) == pet);

    CHECK(star_graph(4).max_degree() == 3);
    CHECK(path_graph(1).size() == 0);
    for (const graph& g : {complete_graph(7), cycle_graph(9), path_graph(5), star_graph(6),
                           complete_bipartite_graph(2, 5), pet, empty_graph(4)}) {
        testing::check_graph_invariants(g);
    }
}

TEST_CASE("cartesian product and disjoint union") {
    const graph prism = cartesian_product(path_graph(2), cycle_graph(3));
    CHECK(prism.order() == 6);
    CHECK(prism.size() == 9);
    CHECK(prism.regular_degree() == 3);

    const graph cube = cartesian_product(path_graph(2), cycle_graph(4));
    CHECK(cube.order() == 8);
    CHECK(cube.size() == 12);
    CHECK(cube.regular_degree() == 3);
    CHECK(cube.adjacent(0, 4));  // (0,0) ~ (1,0)
    CHECK(cube.adjacent(0, 3));  // (0,0) ~ (0,3)

    CHECK(code_of([] { cartesian_product(path_graph(2), complete_graph(33)); }) == errc::product_too_large);

    const graph k4k4 = disjoint_union(complete_graph(4), complete_graph(4));
    CHECK(k4k4.order() == 8);
    CHECK(k4k4.regular_degree() == 3);
    CHECK(connected_components(k4k4).size() == 2);

    const graph k4k33 = disjoint_union(complete_graph(4), complete_bipartite_graph(3, 3));
    CHECK(k4k33.order() == 10);
    CHECK(k4k33.regular_degree() == 3);
    CHECK(connected_components(k4k33).size() == 2);
    CHECK(k4k33.adjacent(4, 7));

    const graph k1k1 = disjoint_union(complete_graph(1), complete_graph(1));
    CHECK(k1k1 == empty_graph(2));
    CHECK(code_of([] { disjoint_union(empty_graph(40), empty_graph(25)); }) == errc::union_too_large);
}

TEST_CASE("product and union properties on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const graph g = testing::random_graph(1 + static_cast<int>(rng() % 12), 0.25, rng);
        const graph h = testing::random_graph(1 + static_cast<int>(rng() % 12), 0.25, rng);
        const graph u = disjoint_union(g, h);
        testing::check_graph_invariants(u);
        CHECK(connected_components(u).size() ==
              connected_components(g).size() + connected_components(h).size());
    }
    const graph regulars[] = {cycle_graph(4), complete_graph(4), petersen_graph(), empty_graph(3),
                              complete_bipartite_graph(2, 2), path_graph(2)};
    for (const graph& a : regulars) {
        for (const graph& b : regulars) {
            if (a.order() * b.order() > 64) continue;
            const graph p = cartesian_product(a, b);
            testing::check_graph_invariants(p);
            CHECK(p.regular_degree() == *a.regular_degree() + *b.regular_degree());
        }
    }
}

TEST_CASE("connected subsets") {
    const graph c5 = cycle_graph(5);
    CHECK(is_connected_subset(c5, {0, 1, 2}));
    CHECK_FALSE(is_connected_subset(c5, {0, 2}));
    CHECK(is_connected_subset(c5, {4, 0}));
    for (int v = 0; v < 5; ++v) CHECK(is_connected_subset(c5, vertex_set::single(v)));
    CHECK(code_of([&] { is_connected_subset(c5, vertex_set{}); }) == errc::empty_set);
}

TEST_CASE("structural queries") {
    CHECK(cut_vertices(path_graph(3)) == vertex_set{1});
    CHECK(cut_vertices(cycle_graph(5)).empty());
    CHECK_FALSE(star_graph(4).regular_degree().has_value());
    CHECK(cut_vertices(star_graph(5)) == vertex_set{0});
    CHECK(cut_vertices(path_graph(2)).empty());

    const auto seq = degree_sequence_of(star_graph(4));
    CHECK(seq.degrees == std::vector<int>{3, 1, 1, 1});
    CHECK(seq.distinct_values == 2);
    CHECK(degree_sequence_of(petersen_graph()).distinct_values == 1);

    const auto comps = connected_components(disjoint_union(path_graph(3), complete_graph(2)));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == vertex_set{0, 1, 2});
    CHECK(comps[1] == vertex_set{3, 4});
}

TEST_CASE("cut vertices agree with remove-and-recount") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const double p = 0.1 + 0.05 * static_cast<double>(rng() % 8);
        const graph g = testing::random_graph(n, p, rng);
        const int base = static_cast<int>(connected_components(g).size());
        vertex_set expected;
        for (int v = 0; v < n; ++v)
            if (component_count_without(g, v) > base) expected.insert(v);
        CHECK(cut_vertices(g) == expected);
    }
}
