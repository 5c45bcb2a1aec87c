#include <doctest.h>

#include "test_support.hpp"

#include <algorithm>
#include <set>

#include "oneplane/drawing.hpp"

using namespace oneplane;

namespace {

sketch plane_c4() {
    sketch sk;
    sk.n = 4;
    sk.labels.assign(4, "");
    sk.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    sk.rot = {{0, 3}, {0, 1}, {1, 2}, {2, 3}};
    return sk;
}

sketch crossed_k4() {
    sketch sk;
    sk.n = 4;
    sk.labels.assign(4, "");
    sk.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}};
    sk.crossings.push_back({4, 5, true});
    sk.rot = {{0, 4, 3}, {1, 5, 0}, {2, 4, 1}, {3, 5, 2}};
    return sk;
}

sketch bowtie() {
    sketch sk;
    sk.n = 5;
    sk.labels.assign(5, "");
    sk.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
    sk.rot = {{0, 2, 3, 5}, {0, 1}, {1, 2}, {3, 4}, {4, 5}};
    return sk;
}

}   // namespace

TEST_CASE("plane four-cycle builds with two quadrilateral faces") {
    drawing d = drawing::build(plane_c4());
    CHECK(d.n() == 4);
    CHECK(d.m() == 4);
    CHECK(d.x() == 0);
    CHECK(d.planar_n() == 4);
    CHECK(d.planar_m() == 4);
    CHECK(d.face_count() == 2);
    CHECK(d.face_degree(0) == 4);
    CHECK(d.face_degree(1) == 4);
    CHECK(d.connected());
    CHECK(d.component_count() == 1);
    for (int v = 0; v < 4; ++v) CHECK(d.planar_degree(v) == 2);
}

TEST_CASE("crossed complete graph on four vertices") {
    drawing d = drawing::build(crossed_k4());
    CHECK(d.n() == 4);
    CHECK(d.m() == 6);
    CHECK(d.x() == 1);
    CHECK(d.planar_n() == 5);
    CHECK(d.planar_m() == 8);
    CHECK(d.face_count() == 5);
    CHECK(d.is_fake(4));
    CHECK_FALSE(d.is_fake(3));
    CHECK(d.planar_degree(4) == 4);
    CHECK(d.edge_crossed(4));
    CHECK(d.edge_crossed(5));
    CHECK_FALSE(d.edge_crossed(0));
    CHECK(d.crossing_of_edge(4) == 0);
    CHECK(d.crossing_of_edge(0) == -1);

    int triangles = 0;
    for (int f = 0; f < d.face_count(); ++f)
        if (d.face_degree(f) == 3) ++triangles;
    CHECK(triangles == 4);
}

TEST_CASE("dart structure is a fixed-point-free involution with consistent faces") {
    drawing d = drawing::build(crossed_k4());
    std::set<int> seen;
    for (int dart = 0; dart < d.dart_count(); ++dart) {
        CHECK(d.twin(dart) != dart);
        CHECK(d.twin(d.twin(dart)) == dart);
        int f = d.face_of(dart);
        auto walk = d.face_walk(f);
        CHECK(std::count(walk.begin(), walk.end(), dart) == 1);
        seen.insert(dart);
    }
    CHECK((int)seen.size() == d.dart_count());

    int total = 0;
    for (int f = 0; f < d.face_count(); ++f) total += d.face_degree(f);
    CHECK(total == d.dart_count());
}

TEST_CASE("bowtie face walk visits the cut vertex twice") {
    drawing d = drawing::build(bowtie());
    CHECK(d.face_count() == 3);
    int big = -1;
    for (int f = 0; f < d.face_count(); ++f)
        if (d.face_degree(f) == 6) big = f;
    REQUIRE(big != -1);
    auto verts = d.face_vertices(big);
    CHECK(std::count(verts.begin(), verts.end(), 0) == 2);
}

TEST_CASE("loops and duplicate edges are rejected") {
    sketch sk = plane_c4();
    sk.edges[1] = {1, 1};
    sk.rot = {{0, 3}, {0, 1, 1}, {2}, {2, 3}};
    CHECK(error_code_of([&] { drawing::build(sk); }) == "LoopEdge");

    sketch dup = plane_c4();
    dup.edges[2] = {0, 1};
    dup.rot = {{0, 2, 3}, {0, 1, 2}, {1}, {3}};
    CHECK(error_code_of([&] { drawing::build(dup); }) == "DuplicateEdge");
}

TEST_CASE("crossing misuse is rejected") {
    sketch sk = crossed_k4();
    sk.crossings.push_back({4, 5, true});
    CHECK(error_code_of([&] { drawing::build(sk); }) == "EdgeCrossedTwice");

    sketch adj = crossed_k4();
    adj.crossings[0] = {0, 1, true};
    CHECK(error_code_of([&] { drawing::build(adj); }) == "AdjacentCrossing");
}

TEST_CASE("rotation lists must match the incident edges") {
    sketch sk = plane_c4();
    sk.rot[0] = {0};
    CHECK(error_code_of([&] { drawing::build(sk); }) == "SyntaxError");
    sk = plane_c4();
    std::swap(sk.rot[0], sk.rot[1]);
    CHECK_THROWS_AS(drawing::build(sk), drawing_error);
}

TEST_CASE("non-spherical rotation systems are rejected") {
    sketch sk;
    sk.n = 4;
    sk.labels.assign(4, "");
    sk.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    sk.rot = {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
    CHECK(error_code_of([&] { drawing::build(sk); }) == "NotGenusZero");
}

TEST_CASE("disconnected drawings build but report their components") {
    sketch sk;
    sk.n = 6;
    sk.labels.assign(6, "");
    sk.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    sk.rot = {{0, 2}, {0, 1}, {1, 2}, {3, 5}, {3, 4}, {4, 5}};
    drawing d = drawing::build(sk);
    CHECK_FALSE(d.connected());
    CHECK(d.component_count() == 2);
    CHECK(d.face_count() == 4);
}

TEST_CASE("abstract adjacency answers edge queries") {
    drawing d = drawing::build(crossed_k4());
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            CHECK(d.has_edge(u, v) == (u != v));
    drawing c4 = drawing::build(plane_c4());
    CHECK(c4.has_edge(0, 1));
    CHECK_FALSE(c4.has_edge(0, 2));
}
