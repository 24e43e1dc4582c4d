#include <doctest.h>

#include <cstdlib>
#include <set>

#include "domlab/domatic.hpp"
#include "domlab/error.hpp"
#include "domlab/generators.hpp"
#include "domlab/io.hpp"
#include "domlab/verify.hpp"
#include "oracles.hpp"

using namespace domlab;
using oracle::error_of;

TEST_CASE("isomorphism class counts") {
    std::vector<int> per_order(7, 0);
    for (const Graph& g : nonisomorphic_graphs(6)) ++per_order[static_cast<std::size_t>(g.order())];
    CHECK(per_order == std::vector<int>{0, 1, 2, 4, 11, 34, 156});
    CHECK(error_of([] { nonisomorphic_graphs(7); }) == ErrorCode::TooLarge);
}

TEST_CASE("generators are deterministic") {
    CHECK(random_graph(10, 0.3, 4) == random_graph(10, 0.3, 4));
    CHECK(random_cnf3(5, 8, 4) == random_cnf3(5, 8, 4));
    CHECK(random_matrix(4, 5, 0.5, 4) == random_matrix(4, 5, 0.5, 4));
    CHECK(random_graph(8, 0.0, 1).size() == 0);
    CHECK(random_graph(8, 1.0, 1) == complete_graph(8));
    TripleSystem t = random_triples(6, 20, 4);
    CHECK(t == random_triples(6, 20, 4));
    for (const auto& s : t.sets) {
        std::set<int> vars;
        for (const auto& l : s) {
            CHECK(!l.negated);
            vars.insert(l.var);
        }
        CHECK(vars.size() == 3);
    }
    CHECK(all_matrices(3, 3).size() == 512);
    CHECK(error_of([] { all_matrices(5, 5); }) == ErrorCode::TooLarge);
    CHECK(error_of([] { random_graph(3, 1.5, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("corpora") {
    auto srp = srp_corpus(1);
    CHECK(srp.size() == 500);
    auto lem = lemma3_corpus(1);
    CHECK(lem.size() == 24);
    for (const auto& [name, g] : lem) {
        CHECK(!is_two_colorable(g));
        CHECK(!has_isolated_vertex(g));
    }
    auto nae = nae_corpus(1);
    CHECK(nae.size() == 22);
    for (const auto& p : nae) {
        bool a = nae3_decide(p.h1).satisfiable;
        bool b = nae3_decide(p.h2).satisfiable;
        CHECK(p.expected_gamma == (a ? (b ? 4 : 3) : 2));
        CHECK(!(!a && b));
    }
    auto tri = triple_corpus(1);
    CHECK(tri.size() == 20);
    int sat = 0;
    for (const auto& t : tri) {
        CHECK(t.satisfiable == one_in_three_decide(t.system).satisfiable);
        sat += t.satisfiable ? 1 : 0;
    }
    CHECK(sat == 10);
    CHECK(lemma3_corpus(1).front().second == lemma3_corpus(2).front().second);
}

TEST_CASE("reports") {
    VerifyReport r;
    r.campaign = "demo";
    r.records = {{"a", "1", "x", "x", RecordStatus::Ok}, {"b", "2", "x", "?", RecordStatus::Timeout}};
    CHECK(r.summary().ok == 1);
    CHECK(r.summary().timeout == 1);
    CHECK(r.exit_code() == 3);
    r.records.push_back({"c", "3", "x", "y", RecordStatus::Fail});
    CHECK(r.exit_code() == 1);
    Json j = r.to_json();
    CHECK(j["records"].size() == 3);
    CHECK(r.to_table().find("demo") != std::string::npos);
    r.records.clear();
    CHECK(r.exit_code() == 0);
}

TEST_CASE("FNV-1a digests") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("run_checks keeps input order") {
    std::vector<Check> checks;
    for (int i = 0; i < 20; ++i)
        checks.push_back([i] { return VerifyRecord{std::to_string(i), "", "", "", RecordStatus::Ok}; });
    auto out = run_checks(checks, 3);
    REQUIRE(out.size() == 20);
    for (int i = 0; i < 20; ++i) CHECK(out[static_cast<std::size_t>(i)].instance == std::to_string(i));
}

TEST_CASE("campaigns") {
    CHECK(campaign_names().size() == 11);
    CHECK(error_of([] { run_campaign("nope", 1, Budget::unlimited(), 1); }) == ErrorCode::InvalidArgument);
    auto r = run_campaign("thm10-k1", 1, Budget::seconds(60), 1);
    CHECK(r.summary().fail == 0);
    CHECK(r.exit_code() == 0);
    auto again = run_campaign("thm10-k1", 1, Budget::seconds(60), 1);
    REQUIRE(again.records.size() == r.records.size());
    for (std::size_t i = 0; i < r.records.size(); ++i) CHECK(again.records[i].digest == r.records[i].digest);
}
