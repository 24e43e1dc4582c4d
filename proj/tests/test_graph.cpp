#include <doctest.h>

#include "domlab/error.hpp"
#include "domlab/generators.hpp"
#include "domlab/graph.hpp"
#include "oracles.hpp"

using namespace domlab;
using oracle::error_of;

TEST_CASE("build_graph validates edges") {
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(k3.has_edge(2, 0));
    CHECK(error_of([] { build_graph(2, {{0, 0}}); }) == ErrorCode::SelfLoop);
    CHECK(error_of([] { build_graph(2, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
    CHECK(error_of([] { build_graph(2, {{0, 2}}); }) == ErrorCode::EndpointOutOfRange);
    CHECK(error_of([] { build_graph(2, {{-1, 1}}); }) == ErrorCode::EndpointOutOfRange);
}

TEST_CASE("edges are stored sorted with u < v") {
    Graph g = build_graph(4, {{3, 0}, {2, 1}, {1, 0}});
    std::vector<Edge> want{{0, 1}, {0, 3}, {1, 2}};
    CHECK(g.edges() == want);
}

TEST_CASE("degree_stats") {
    CHECK(degree_stats(complete_graph(4)) == DegreeStats{3, 3});
    CHECK(degree_stats(star_graph(3)) == DegreeStats{1, 3});
    CHECK(degree_stats(empty_graph(1)) == DegreeStats{0, 0});
    CHECK(error_of([] { degree_stats(empty_graph(0)); }) == ErrorCode::EmptyGraph);
}

TEST_CASE("join examples") {
    CHECK(join(complete_graph(2), complete_graph(2)) == complete_graph(4));
    CHECK(join(empty_graph(1), empty_graph(1)) == complete_graph(2));
    Graph g = join(cycle_graph(4), empty_graph(1));
    CHECK(g.order() == 5);
    CHECK(g.size() == 8);
    CHECK(g.label(0) == "A.0");
    CHECK(g.label(4) == "B.0");
}

TEST_CASE("join edge count and associativity on random pairs") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph a = random_graph(1 + static_cast<int>(s % 5), 0.5, s);
        Graph b = random_graph(1 + static_cast<int>((s * 7) % 6), 0.4, s + 100);
        Graph c = random_graph(3, 0.5, s + 200);
        Graph ab = join(a, b);
        CHECK(ab.size() == a.size() + b.size() + static_cast<std::size_t>(a.order() * b.order()));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
    }
}

TEST_CASE("disjoint union and components") {
    Graph g = disjoint_union(complete_graph(3), path_graph(2));
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);
    CHECK(!g.has_edge(2, 3));
    CHECK(connected_components(g) == 2);
    CHECK(connected_components(empty_graph(4)) == 4);
}

TEST_CASE("is_dominating_set examples") {
    Graph k3 = complete_graph(3);
    std::vector<Vertex> one{0};
    CHECK(is_dominating_set(k3, one));
    Graph p3 = path_graph(3);
    std::vector<Vertex> end{0};
    std::vector<Vertex> mid{1};
    CHECK(!is_dominating_set(p3, end));
    CHECK(is_dominating_set(p3, mid));
    std::vector<Vertex> none;
    CHECK(!is_dominating_set(p3, none));
    CHECK(is_dominating_set(empty_graph(0), none));
    std::vector<Vertex> bad{3};
    CHECK(error_of([&] { (void)is_dominating_set(p3, bad); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("is_dominating_set agrees with the double loop on every subset") {
    for (const Graph& g : nonisomorphic_graphs(5)) {
        const int n = g.order();
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<Vertex> set;
            std::vector<bool> in(static_cast<std::size_t>(n), false);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) {
                    set.push_back(v);
                    in[static_cast<std::size_t>(v)] = true;
                }
            REQUIRE(is_dominating_set(g, set) == oracle::dominates(g, in));
        }
    }
}

TEST_CASE("isolated vertices and bipartiteness") {
    CHECK(has_isolated_vertex(empty_graph(2)));
    CHECK(!has_isolated_vertex(path_graph(2)));
    CHECK(is_two_colorable(cycle_graph(4)));
    CHECK(!is_two_colorable(cycle_graph(5)));
    CHECK(is_two_colorable(empty_graph(3)));
    for (const Graph& g : nonisomorphic_graphs(6)) REQUIRE(is_two_colorable(g) == oracle::colorable(g, 2));
}

TEST_CASE("named graphs") {
    CHECK(complete_graph(5).size() == 10);
    CHECK(cycle_graph(5).size() == 5);
    CHECK(path_graph(4).size() == 3);
    CHECK(star_graph(4).order() == 5);
    Graph w = wheel_graph(5);
    CHECK(w.order() == 6);
    CHECK(w.degree(0) == 5);
    CHECK(w.size() == 10);
}

TEST_CASE("make_decorated rejects non-triangles") {
    Graph k4 = complete_graph(4);
    CHECK(make_decorated(k4, {{0, 1, 2}}).triangles.size() == 1);
    Graph p3 = path_graph(3);
    CHECK(error_of([&] { make_decorated(p3, {{0, 1, 2}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Partition::classes keeps empty classes") {
    Partition p{3, {0, 2, 0}};
    auto cls = p.classes();
    REQUIRE(cls.size() == 3);
    CHECK(cls[0] == std::vector<Vertex>{0, 2});
    CHECK(cls[1].empty());
    CHECK(cls[2] == std::vector<Vertex>{1});
}
