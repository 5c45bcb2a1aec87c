#include <doctest.h>

#include <vector>

#include "oneplane/cliques.hpp"
#include "oneplane/drawing.hpp"
#include "oneplane/invariants.hpp"
#include "oneplane/search.hpp"

using namespace oneplane;

namespace {

abstract_graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return make_graph(n, edges);
}

abstract_graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return make_graph(a + b, edges);
}

}   // namespace

TEST_CASE("planar inputs come back without crossings") {
    abstract_graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    search_result res = drawing_search(c4);
    REQUIRE(res.found.has_value());
    CHECK(res.found->x() == 0);
    CHECK(check_edge_formula(*res.found).ok);
}

TEST_CASE("found drawings realize the requested graph") {
    abstract_graph k5 = complete(5);
    search_result res = drawing_search(k5);
    REQUIRE(res.found.has_value());
    CHECK(res.found->m() == 10);
    CHECK(res.found->x() >= 1);
    abstract_graph back = abstract_of(*res.found);
    CHECK(back.edges == k5.edges);
    CHECK(check_edge_formula(*res.found).ok);
}

TEST_CASE("complete graph on four vertices needs no crossing") {
    search_result res = drawing_search(complete(4));
    REQUIRE(res.found.has_value());
    CHECK(res.found->x() == 0);
}

TEST_CASE("the unconditional cap rejects dense graphs outright") {
    search_result res = drawing_search(complete(7));   // 21 edges > 4*7-9
    CHECK_FALSE(res.found.has_value());
    CHECK(res.exhausted_full_space);
    CHECK(res.crossing_sets_tried == 0);
}

TEST_CASE("dense bipartite graphs are rejected by the bipartite bound") {
    search_result res = drawing_search(complete_bipartite(4, 5));   // 20 > 3*9-8
    CHECK_FALSE(res.found.has_value());
    CHECK(res.exhausted_full_space);
}

TEST_CASE("disconnected inputs are drawable too") {
    abstract_graph two = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    search_result res = drawing_search(two);
    REQUIRE(res.found.has_value());
    CHECK(res.found->x() == 0);
    CHECK(res.found->component_count() == 2);
    CHECK(abstract_of(*res.found).edges == two.edges);
}

TEST_CASE("search budget is reported when it runs out") {
    search_limits tiny;
    tiny.max_rotation_systems = 2;
    search_result res = drawing_search(complete(5), tiny);
    if (!res.found.has_value()) {
        CHECK_FALSE(res.exhausted_full_space);
        CHECK_FALSE(res.reject_reason.empty());
    }
}
