#include <doctest.h>

#include "domlab/domatic.hpp"
#include "domlab/error.hpp"
#include "domlab/generators.hpp"
#include "domlab/reductions.hpp"
#include "domlab/verify.hpp"
#include "oracles.hpp"

using namespace domlab;
using oracle::error_of;

namespace {

Clause C(int a, int b, int c) { return {Literal::from_signed(a), Literal::from_signed(b), Literal::from_signed(c)}; }

int distinct_literals(const TripleSystem& s) {
    std::vector<int> seen;
    for (const auto& set : s.sets)
        for (const auto& l : set)
            if (std::find(seen.begin(), seen.end(), l.var) == seen.end()) seen.push_back(l.var);
    return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("Kaplan-Shamir image") {
    DecoratedGraph k3 = kaplan_shamir(complete_graph(3));
    CHECK(k3.graph.order() == 6);
    CHECK(k3.graph.size() == 9);
    REQUIRE(k3.triangles.size() == 3);
    CHECK(k3.triangles[0] == Triangle{0, 3, 1});
    CHECK(k3.graph.label(3) == "u1,2");
    CHECK(degree_stats(k3.graph).min_deg == 2);
    CHECK(domatic_number(k3.graph) == 3);

    DecoratedGraph k4 = kaplan_shamir(complete_graph(4));
    CHECK(k4.graph.order() == 10);
    CHECK(k4.graph.size() == 18);
    CHECK(k4.triangles.size() == 6);
    CHECK(domatic_number(k4.graph) == 2);

    CHECK(error_of([] { kaplan_shamir(path_graph(3)); }) == ErrorCode::TwoColorable);
    CHECK(error_of([] { kaplan_shamir(disjoint_union(empty_graph(1), complete_graph(3))); }) ==
          ErrorCode::IsolatedVertex);
}

TEST_CASE("Kaplan-Shamir images have domatic number 2 or 3") {
    for (const auto& [name, g] : lemma3_corpus(5)) {
        DecoratedGraph h = kaplan_shamir(g);
        int d = domatic_number(h.graph);
        INFO(name);
        CHECK((d == 3) == (chromatic_number(g) == 3));
        CHECK((d == 2) == (chromatic_number(g) != 3));
    }
}

TEST_CASE("gadget join structure") {
    std::vector<DecoratedGraph> hs{kaplan_shamir(complete_graph(3)), kaplan_shamir(complete_graph(4)),
                                   kaplan_shamir(cycle_graph(5)), kaplan_shamir(wheel_graph(5))};
    for (const auto& a : hs)
        for (const auto& b : hs) {
            Graph g = gadget_join(a, b);
            CHECK(oracle::gadget_violation(a, b, g) == "");
        }
    Graph g33 = gadget_join(hs[0], hs[0]);
    CHECK(g33.order() == 66);
    CHECK(g33.label(0) == "H1.v1");
    CHECK(g33.label(6) == "H2.v1");
    CHECK(g33.label(12) == "g(1,1).a1");
    CHECK(g33.label(17) == "g(1,1).a6");
    DecoratedGraph bare{complete_graph(3), {}};
    CHECK(error_of([&] { gadget_join(bare, hs[0]); }) == ErrorCode::EmptyDecoration);
}

TEST_CASE("gadget join adds domatic numbers") {
    DecoratedGraph k3 = kaplan_shamir(complete_graph(3));
    DecoratedGraph k4 = kaplan_shamir(complete_graph(4));
    CHECK(domatic_number(gadget_join(k3, k3)) == 6);
    CHECK(domatic_number(gadget_join(k3, k4)) == 5);
    CHECK(domatic_number(gadget_join(k4, k4)) == 4);
}

TEST_CASE("multi-operand gadget join") {
    DecoratedGraph k3 = kaplan_shamir(complete_graph(3));
    DecoratedGraph k4 = kaplan_shamir(complete_graph(4));
    std::vector<DecoratedGraph> pair{k3, k4};
    Graph one = multi_gadget_join(pair);
    Graph two = gadget_join(k3, k4);
    CHECK(one == two);
    CHECK(one.labels() == two.labels());

    std::vector<DecoratedGraph> quad{k3, k3, k3, k4};
    Graph g = multi_gadget_join(quad);
    CHECK(g.order() == 6 * 3 + 10 + 12 * 3 * 3 * 3 * 6);
    for (Vertex v = 28; v < g.order(); ++v) REQUIRE(g.degree(v) == 11);
    CHECK(g.label(28) == "g(1,1,1,1).a1");
    CHECK(g.label(28 + 12) == "g(1,1,1,2).a1");

    std::vector<DecoratedGraph> odd{k3, k3, k3};
    CHECK(error_of([&] { multi_gadget_join(odd); }) == ErrorCode::OddLength);
    std::vector<DecoratedGraph> single{k3};
    CHECK(error_of([&] { multi_gadget_join(single); }) == ErrorCode::OddLength);
    std::vector<DecoratedGraph> bare{k3, DecoratedGraph{complete_graph(3), {}}};
    CHECK(error_of([&] { multi_gadget_join(bare); }) == ErrorCode::EmptyDecoration);
}

TEST_CASE("domatic partitions extend to the multi-operand join") {
    DecoratedGraph k3 = kaplan_shamir(complete_graph(3));
    DecoratedGraph k4 = kaplan_shamir(complete_graph(4));
    auto part = [](const DecoratedGraph& h) {
        auto r = exists_partition(h.graph, domatic_number(h.graph), SigmaRhoSpec::naturals(),
                                  SigmaRhoSpec::positive());
        return *r.witness;
    };
    std::vector<DecoratedGraph> ops{k3, k4, k3, k3};
    std::vector<Partition> ps{part(k3), part(k4), part(k3), part(k3)};
    Partition ext = extend_domatic_partitions(ops, ps);
    CHECK(ext.k == 11);
    CHECK(check_partition(multi_gadget_join(ops), ext, SigmaRhoSpec::naturals(), SigmaRhoSpec::positive()));
}

TEST_CASE("times and parity pairs") {
    DecoratedGraph k3 = kaplan_shamir(complete_graph(3));
    DecoratedGraph k4 = kaplan_shamir(complete_graph(4));
    DecoratedGraph t = times(k3, k4);
    CHECK(t.graph == gadget_join(k3, k4));
    REQUIRE(t.triangles.size() == 9);
    CHECK(t.triangles[3] == Triangle{6 + k4.triangles[0][0], 6 + k4.triangles[0][1], 6 + k4.triangles[0][2]});
    CHECK(t.graph.order() == 6 + 10 + 6 * 3 * 6);

    std::vector<DecoratedGraph> two{k3, k4};
    auto [odd1, even1] = parity_pair(two);
    CHECK(odd1 == k3);
    CHECK(even1 == k4);

    std::vector<DecoratedGraph> four{k3, k4, k3, k3};
    auto [odd2, even2] = parity_pair(four);
    CHECK(odd2 == times(k3, k3));
    CHECK(even2 == times(k4, k3));
    CHECK(domatic_number(odd2.graph) == 6);
    CHECK(domatic_number(even2.graph) == 5);

    std::vector<DecoratedGraph> three{k3, k3, k3};
    CHECK(error_of([&] { parity_pair(three); }) == ErrorCode::OddLength);
}

TEST_CASE("exact domatic target sets") {
    CHECK(exact_mk_set(1).values() == std::vector<int>{5});
    CHECK(exact_mk_set(2).values() == std::vector<int>{9, 11});
    CHECK(exact_mk_set(3).values() == std::vector<int>{13, 15, 17});
    for (int k = 1; k <= 10; ++k) REQUIRE(exact_mk_set(k).values().size() == static_cast<std::size_t>(k));
    CHECK(error_of([] { exact_mk_set(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("NAE construction") {
    auto [f1, f2] = nae_figure_pair();
    Graph g = nae_construct(f1, f2);
    CHECK(g.order() == 16 + 6 + 6 + 9 + 4 + 4);
    CHECK(g.label(0) == "a1");
    CHECK(g.label(8) == "b1");
    CHECK(g.label(16) == "x1");
    CHECK(g.label(17) == "~x1");
    int want = 2;
    if (nae3_decide(f1).satisfiable) want = nae3_decide(f2).satisfiable ? 4 : 3;
    CHECK(gamma(g) == want);

    for (std::uint64_t s = 0; s < 10; ++s) {
        Cnf3 a = random_cnf3(2 + static_cast<int>(s % 3), 1 + static_cast<int>(s % 2), s);
        Cnf3 b = random_cnf3(2 + static_cast<int>((s + 1) % 3), 1 + static_cast<int>((s + 1) % 2), s + 50);
        Cnf3 pa = nae_preprocess(a);
        Cnf3 pb = nae_preprocess(b);
        const int n = pa.num_vars, r = pb.num_vars;
        const int m = static_cast<int>(pa.clauses.size()), q = static_cast<int>(pb.clauses.size());
        REQUIRE(nae_construct(a, b).order() == 16 + 2 * n + 2 * r + n * r + 2 * m + 2 * q);
    }
}

TEST_CASE("NAE construction outcome classes") {
    for (const auto& p : nae_corpus(3, 1)) {
        INFO(p.name);
        CHECK(gamma(nae_construct(p.h1, p.h2)) == p.expected_gamma);
    }
}

TEST_CASE("one-in-three graph") {
    TripleSystem xyz = make_triple_system(3, {C(1, 2, 3)});
    Graph g = ht_one_in_three(xyz);
    CHECK(g.order() == 4 + 2 * 3 + 4);
    CHECK(g.label(0) == "S1.x1");
    CHECK(g.label(3) == "S1.a");
    CHECK(alpha(g) == 2);

    TripleSystem k4 = make_triple_system(4, {C(1, 2, 3), C(1, 2, 4), C(1, 3, 4), C(2, 3, 4)});
    Graph h = ht_one_in_three(k4);
    CHECK(h.order() == 4 * 4 + 2 * 4 + 4);
    CHECK(alpha(h) == 3);

    for (const auto& tc : triple_corpus(4, 3)) {
        Graph t = ht_one_in_three(tc.system);
        INFO(tc.name);
        REQUIRE(t.order() == 4 * static_cast<int>(tc.system.sets.size()) + 2 * distinct_literals(tc.system) + 4);
        CHECK(alpha(t) == (tc.satisfiable ? 2 : 3));
    }
    TripleSystem neg = make_triple_system(3, {C(1, -2, 3)});
    CHECK(error_of([&] { ht_one_in_three(neg); }) == ErrorCode::NegativeLiteral);
}

TEST_CASE("beta equals alpha on one-in-three images") {
    TripleSystem xyz = make_triple_system(3, {C(1, 2, 3)});
    CHECK(beta_equals_alpha_check(ht_one_in_three(xyz), xyz));
    TripleSystem k4 = make_triple_system(4, {C(1, 2, 3), C(1, 2, 4), C(1, 3, 4), C(2, 3, 4)});
    CHECK(beta_equals_alpha_check(ht_one_in_three(k4), k4));
    CHECK(error_of([&] { (void)beta_equals_alpha_check(complete_graph(4), xyz); }) == ErrorCode::NotAnImage);
    CHECK(error_of([&] { (void)beta_equals_alpha_check(ht_one_in_three(xyz), k4); }) == ErrorCode::NotAnImage);
}

TEST_CASE("doubled one-in-three join") {
    TripleSystem sat = make_triple_system(3, {C(1, 2, 3)});
    TripleSystem uns = make_triple_system(4, {C(1, 2, 3), C(1, 2, 4), C(1, 3, 4), C(2, 3, 4)});
    const int fs = ht_one_in_three(sat).order();
    const int fu = ht_one_in_three(uns).order();
    Graph ss = thm6_construct(sat, sat);
    CHECK(ss.order() == 4 * fs);
    Graph su = thm6_construct(sat, uns);
    CHECK(su.order() == 2 * fs + 2 * fu);
    // a clique of one side joined to a clique of the other gives an 8-clique
    CHECK(su.has_edge(0, 2 * fs));
    CHECK(!su.has_edge(0, fs));
    CHECK(alpha(ss) == 4);
    CHECK(alpha(su) == 5);
    CHECK(beta_equals_alpha_check(ss, sat, sat));
    CHECK(error_of([&] { (void)beta_equals_alpha_check(ss, sat, uns); }) == ErrorCode::NotAnImage);
}
