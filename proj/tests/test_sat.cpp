#include <doctest.h>

#include "domlab/error.hpp"
#include "domlab/generators.hpp"
#include "domlab/sat.hpp"
#include "oracles.hpp"

using namespace domlab;
using oracle::error_of;

namespace {

Literal L(int s) { return Literal::from_signed(s); }
Clause C(int a, int b, int c) { return {L(a), L(b), L(c)}; }

Assignment bits(int n, int mask) {
    Assignment t(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) t[static_cast<std::size_t>(v)] = (mask >> v & 1) != 0;
    return t;
}

// Independent NAE check: some literal true and some literal false per clause.
bool nae_by_hand(const Cnf3& f) {
    for (int mask = 0; mask < (1 << f.num_vars); ++mask) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            int t = 0;
            for (const auto& l : c) t += ((mask >> l.var & 1) != 0) != l.negated ? 1 : 0;
            if (t == 0 || t == 3) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("literals") {
    CHECK(L(3).var == 2);
    CHECK(!L(3).negated);
    CHECK(L(-1).negated);
    CHECK(L(-2).to_signed() == -2);
    CHECK((~L(4)).to_signed() == -4);
    CHECK(error_of([] { Literal::from_signed(0); }) == ErrorCode::ParseError);
    CHECK(error_of([] { make_cnf3(2, {C(1, 2, 3)}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("3-SAT examples") {
    Cnf3 f = make_cnf3(3, {C(1, 2, 3), C(-1, -2, -3)});
    auto r = sat3_decide(f);
    REQUIRE(r.satisfiable);
    CHECK(satisfies(f, *r.assignment));
    Cnf3 g = make_cnf3(1, {C(1, 1, 1), C(-1, -1, -1)});
    CHECK(!sat3_decide(g).satisfiable);
    CHECK(sat3_decide(make_cnf3(0, {})).satisfiable);
}

TEST_CASE("NAE-3-SAT examples") {
    Cnf3 f = make_cnf3(3, {C(1, 2, 3)});
    auto r = nae3_decide(f);
    REQUIRE(r.satisfiable);
    CHECK(nae_satisfies(f, *r.assignment));
    CHECK(!nae_satisfies(f, bits(3, 7)));
    CHECK(!nae_satisfies(f, bits(3, 0)));
    CHECK(!nae3_decide(make_cnf3(1, {C(1, 1, 1)})).satisfiable);
    // x1 != x2, x2 != x3, x1 != x3 via NAE clauses with a repeated literal
    Cnf3 odd = make_cnf3(3, {C(1, 1, 2), C(2, 2, 3), C(1, 1, 3)});
    CHECK(!nae3_decide(odd).satisfiable);
}

TEST_CASE("NAE decision matches an independent enumeration") {
    for (std::uint64_t s = 0; s < 500; ++s) {
        Cnf3 f = random_cnf3(1 + static_cast<int>(s % 4), 1 + static_cast<int>(s % 5), s);
        auto r = nae3_decide(f);
        REQUIRE(r.satisfiable == nae_by_hand(f));
        if (r.satisfiable) REQUIRE(nae_satisfies(f, *r.assignment));
    }
}

TEST_CASE("NAE closure") {
    Cnf3 f = make_cnf3(2, {C(1, -2, 2)});
    Cnf3 c = nae_closure(f);
    REQUIRE(c.clauses.size() == 2);
    CHECK(c.clauses[0] == C(1, -2, 2));
    CHECK(c.clauses[1] == C(-1, 2, -2));
    for (std::uint64_t s = 0; s < 2000; ++s) {
        Cnf3 g = random_cnf3(1 + static_cast<int>(s % 4), static_cast<int>(s % 4), s);
        REQUIRE(nae3_decide(nae_closure(g)).satisfiable == nae3_decide(g).satisfiable);
    }
}

TEST_CASE("one-in-three counts repeated members") {
    TripleSystem s = make_triple_system(2, {C(1, 1, 2)});
    CHECK(!one_in_three_satisfies(s, bits(2, 1)));
    CHECK(one_in_three_satisfies(s, bits(2, 2)));
    auto r = one_in_three_decide(s);
    REQUIRE(r.satisfiable);
    CHECK(one_in_three_satisfies(s, *r.assignment));
    CHECK(one_in_three_decide(make_triple_system(3, {C(1, 2, 3)})).satisfiable);
    CHECK(!one_in_three_decide(make_triple_system(1, {C(1, 1, 1)})).satisfiable);
    // every pair of {1,2,3,4} sets would need two trues among four variables
    TripleSystem k4 = make_triple_system(4, {C(1, 2, 3), C(1, 2, 4), C(1, 3, 4), C(2, 3, 4)});
    CHECK(!one_in_three_decide(k4).satisfiable);
}

TEST_CASE("one-in-three reports true literals") {
    TripleSystem s = make_triple_system(3, {C(1, 2, 3)});
    auto r = one_in_three_decide(s);
    REQUIRE(r.satisfiable);
    REQUIRE(r.true_literals.size() == 1);
    CHECK(r.true_literals[0].value(*r.assignment));
}

TEST_CASE("max-sat statistics") {
    Cnf3 f = make_cnf3(1, {C(1, 1, 1), C(-1, -1, -1)});
    CHECK(max_sat_stats(f) == MaxSatStats{1, 1});
    Cnf3 g = make_cnf3(3, {C(1, 2, 3), C(-1, 2, 3)});
    CHECK(max_sat_stats(g) == MaxSatStats{2, 0});
    for (std::uint64_t s = 0; s < 200; ++s) {
        Cnf3 h = random_cnf3(1 + static_cast<int>(s % 3), 1 + static_cast<int>(s % 6), s);
        auto st = max_sat_stats(h);
        REQUIRE(st.satisfied + st.unsatisfied == static_cast<int>(h.clauses.size()));
        REQUIRE((st.unsatisfied == 0) == sat3_decide(h).satisfiable);
    }
}

TEST_CASE("enumeration guard") {
    Cnf3 big = make_cnf3(25, {});
    CHECK(error_of([&] { sat3_decide(big); }) == ErrorCode::TooLarge);
    CHECK(error_of([&] { nae3_decide(big); }) == ErrorCode::TooLarge);
    CHECK(error_of([&] { max_sat_stats(big); }) == ErrorCode::TooLarge);
}

TEST_CASE("padding") {
    Cnf3 one = make_cnf3(1, {C(1, -1, 1)});
    Cnf3 two = pad_variables(one, 2);
    CHECK(two.num_vars == 2);
    CHECK(two.clauses == one.clauses);
    CHECK(pad_variables(two, 2) == two);

    Cnf3 padded = pad_literal_occurrences(two);
    CHECK(padded.clauses.size() == 2);
    CHECK(padded.clauses.front() == one.clauses.front());
    CHECK(nae3_decide(padded).satisfiable == nae3_decide(two).satisfiable);

    CHECK(error_of([] { pad_literal_occurrences(make_cnf3(1, {})); }) == ErrorCode::PadFailure);

    for (std::uint64_t s = 0; s < 300; ++s) {
        Cnf3 f = pad_variables(random_cnf3(1 + static_cast<int>(s % 4), static_cast<int>(s % 3), s), 2);
        Cnf3 p = pad_literal_occurrences(f);
        REQUIRE(nae3_decide(p).satisfiable == nae3_decide(f).satisfiable);
        std::vector<bool> used(static_cast<std::size_t>(p.num_vars), false);
        for (const auto& c : p.clauses)
            for (const auto& l : c) used[static_cast<std::size_t>(l.var)] = true;
        for (bool u : used) REQUIRE(u);
    }
}
