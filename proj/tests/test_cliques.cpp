#include <doctest.h>

#include "test_support.hpp"

#include <optional>
#include <vector>

#include "oneplane/cliques.hpp"
#include "oneplane/constructions.hpp"
#include "oneplane/drawing.hpp"

using namespace oneplane;

namespace {

abstract_graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return make_graph(n, edges);
}

}   // namespace

TEST_CASE("clique witness is the lexicographically least one") {
    abstract_graph g = make_graph(
        6, {{0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    auto w3 = clique_witness(g, 3);
    REQUIRE(w3.has_value());
    CHECK(*w3 == std::vector<int>{1, 2, 3});
    auto w4 = clique_witness(g, 4);
    REQUIRE(w4.has_value());
    CHECK(*w4 == std::vector<int>{1, 2, 3, 4});
    CHECK_FALSE(clique_witness(g, 5).has_value());
    CHECK(error_code_of([&] { clique_witness(g, 1); }) == "BadParam");
}

TEST_CASE("has_clique on complete graphs") {
    for (int n = 2; n <= 7; ++n) {
        abstract_graph g = complete(n);
        CHECK(has_clique(g, n));
        CHECK_FALSE(has_clique(g, n + 1));
    }
}

TEST_CASE("graph construction rejects malformed input") {
    CHECK(error_code_of([&] { make_graph(3, {{0, 0}}); }) == "LoopEdge");
    CHECK(error_code_of([&] { make_graph(3, {{0, 1}, {1, 0}}); }) == "DuplicateEdge");
    CHECK(error_code_of([&] { make_graph(3, {{0, 5}}); }) == "SyntaxError");
    CHECK(error_code_of([&] { make_graph(-1, {}); }) == "BadParam");
}

TEST_CASE("edge list parsing round-trips") {
    abstract_graph g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(g.n == 4);
    CHECK(g.edges.size() == 4);
    CHECK(serialize_edge_list(g) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    CHECK(error_code_of([&] { parse_edge_list("4 3\n0 1\n"); }) == "SyntaxError");
    CHECK(error_code_of([&] { parse_edge_list(""); }) == "SyntaxError");
}

TEST_CASE("bipartiteness and connectivity") {
    abstract_graph even = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    abstract_graph odd = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_bipartite(even));
    CHECK_FALSE(is_bipartite(odd));
    CHECK(is_connected(even));
    abstract_graph split = make_graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(split));
    CHECK(is_bipartite(split));
}

TEST_CASE("fixtures satisfy their clique freedom claims") {
    CHECK_FALSE(has_clique(load_fixture("g13_k5"), 5));
    CHECK(has_clique(load_fixture("g13_k5"), 4));
    CHECK_FALSE(has_clique(load_fixture("g10_k4"), 4));
    CHECK(has_clique(load_fixture("g10_k4"), 3));
    CHECK_FALSE(has_clique(load_fixture("fig13_nonbip"), 3));
    CHECK_FALSE(is_bipartite(abstract_of(load_fixture("fig13_nonbip"))));
}

TEST_CASE("balanced multipartite graphs and their sizes") {
    abstract_graph t = turan_graph(7, 5);
    CHECK(t.n == 7);
    CHECK((long long)t.edges.size() == turan_size(7, 5));
    CHECK(turan_size(7, 5) == 18);
    CHECK_FALSE(has_clique(t, 5));
    CHECK(has_clique(t, 4));

    CHECK(turan_size(7, 4) == 16);
    CHECK(turan_size(6, 4) == 12);
    CHECK(turan_size(5, 3) == 6);
    CHECK(turan_size(1, 4) == 0);
    for (int n = 1; n <= 9; ++n)
        for (int k = 3; k <= 6; ++k) {
            abstract_graph g = turan_graph(n, k);
            CHECK((long long)g.edges.size() == turan_size(n, k));
            CHECK_FALSE(has_clique(g, k));
        }
    CHECK(error_code_of([&] { turan_graph(0, 4); }) == "BadParam");
}
