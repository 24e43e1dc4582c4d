#include <doctest.h>

#include "domlab/error.hpp"
#include "domlab/generators.hpp"
#include "domlab/io.hpp"
#include "domlab/reductions.hpp"
#include "oracles.hpp"

using namespace domlab;
using oracle::error_of;

TEST_CASE("DIMACS reading") {
    Graph g = read_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g == complete_graph(3));
    CHECK(read_dimacs("p col 2 1\ne 2 1\n") == path_graph(2));
    CHECK(read_dimacs("p edge 0 0\n").order() == 0);
}

TEST_CASE("DIMACS errors") {
    CHECK(error_of([] { read_dimacs("e 1 2\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { read_dimacs("p edge 2 2\ne 1 2\n"); }) == ErrorCode::HeaderMismatch);
    CHECK(error_of([] { read_dimacs("p edge 2 1\ne 1 3\n"); }) == ErrorCode::EndpointOutOfRange);
    CHECK(error_of([] { read_dimacs("p edge 2 1\ne 1 1\n"); }) == ErrorCode::SelfLoop);
    CHECK(error_of([] { read_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"); }) == ErrorCode::DuplicateEdge);
    try {
        read_dimacs("p edge 3 1\nc ok\ne 1 x\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("DIMACS round trip") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = random_graph(static_cast<int>(s % 12), 0.4, s);
        std::string text = write_dimacs(g);
        REQUIRE(read_dimacs(text) == g);
        REQUIRE(write_dimacs(read_dimacs(text)) == text);
    }
    CHECK(write_dimacs(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("JSON round trips") {
    DecoratedGraph d = kaplan_shamir(complete_graph(3));
    CHECK(graph_from_json(graph_to_json(d.graph)) == d.graph);
    CHECK(graph_from_json(graph_to_json(d.graph)).labels() == d.graph.labels());
    CHECK(decorated_from_json(decorated_to_json(d)) == d);
    CHECK(decorated_from_json(graph_to_json(d.graph)).triangles.empty());

    Partition p{3, {0, 2, 1, 1}};
    CHECK(partition_from_json(partition_to_json(p)) == p);

    Cnf3 f = random_cnf3(4, 5, 9);
    CHECK(cnf3_from_json(cnf3_to_json(f)) == f);
    TripleSystem t = random_triples(5, 4, 9);
    CHECK(triples_from_json(triples_to_json(t)) == t);
    TaskMatrix m = random_matrix(3, 4, 0.5, 9);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("JSON errors") {
    CHECK(error_of([] { parse_json("{"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { graph_from_json(parse_json(R"({"edges": []})")); }) == ErrorCode::ParseError);
    CHECK(error_of([] { graph_from_json(parse_json(R"({"n": 2, "edges": [[0]]})")); }) == ErrorCode::ParseError);
    CHECK(error_of([] { graph_from_json(parse_json(R"({"n": 2, "edges": [[0, 2]]})")); }) ==
          ErrorCode::EndpointOutOfRange);
    CHECK(error_of([] { partition_from_json(parse_json(R"({"k": 2, "class_of": [0, 2]})")); }) ==
          ErrorCode::ParseError);
    CHECK(error_of([] { cnf3_from_json(parse_json(R"({"num_vars": 2, "clauses": [[1, 2]]})")); }) ==
          ErrorCode::ParseError);
    CHECK(error_of([] { cnf3_from_json(parse_json(R"({"num_vars": 2, "clauses": [[1, 2, 0]]})")); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("graph text sniffing") {
    CHECK(read_graph_text("p edge 2 1\ne 1 2\n") == path_graph(2));
    CHECK(read_graph_text(R"({"n": 2, "edges": [[0, 1]]})") == path_graph(2));
    DecoratedGraph d = kaplan_shamir(complete_graph(3));
    CHECK(read_decorated_text(decorated_to_json(d).dump()) == d);
}
