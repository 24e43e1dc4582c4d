#include "domlab/sat.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "domlab/error.hpp"

namespace domlab {
namespace {

void check_literals(int num_vars, const std::vector<Clause>& clauses) {
    if (num_vars < 0) throw Error(ErrorCode::InvalidArgument, "negative variable count");
    for (const Clause& c : clauses)
        for (const Literal& l : c)
            if (l.var < 0 || l.var >= num_vars)
                throw Error(ErrorCode::InvalidArgument, "literal " + std::to_string(l.to_signed()) + " outside " +
                                                            std::to_string(num_vars) + " variables");
}

void guard(int num_vars) {
    if (num_vars > kMaxOracleVars)
        throw Error(ErrorCode::TooLarge, std::to_string(num_vars) + " variables exceed the enumeration guard of " +
                                             std::to_string(kMaxOracleVars));
}

Assignment decode(int num_vars, std::uint32_t bits) {
    Assignment t(static_cast<std::size_t>(num_vars));
    for (int v = 0; v < num_vars; ++v) t[static_cast<std::size_t>(v)] = ((bits >> v) & 1U) != 0;
    return t;
}

SatResult enumerate(int num_vars, const std::function<bool(const Assignment&)>& accept) {
    guard(num_vars);
    const std::uint32_t total = std::uint32_t{1} << num_vars;
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        Assignment t = decode(num_vars, bits);
        if (accept(t)) return SatResult{true, std::move(t), {}};
    }
    return SatResult{};
}

int true_count(const Clause& c, const Assignment& t) {
    return static_cast<int>(std::count_if(c.begin(), c.end(), [&](const Literal& l) { return l.value(t); }));
}

}  // namespace

Literal Literal::from_signed(int lit) {
    if (lit == 0) throw Error(ErrorCode::ParseError, "literal 0 is not allowed");
    return lit > 0 ? Literal{lit - 1, false} : Literal{-lit - 1, true};
}

Cnf3 make_cnf3(int num_vars, std::vector<Clause> clauses) {
    check_literals(num_vars, clauses);
    return Cnf3{num_vars, std::move(clauses)};
}

TripleSystem make_triple_system(int num_vars, std::vector<Clause> sets) {
    check_literals(num_vars, sets);
    return TripleSystem{num_vars, std::move(sets)};
}

bool satisfies(const Cnf3& f, const Assignment& t) {
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) { return true_count(c, t) > 0; });
}

bool nae_satisfies(const Cnf3& f, const Assignment& t) {
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        const int n = true_count(c, t);
        return n > 0 && n < 3;
    });
}

bool one_in_three_satisfies(const TripleSystem& s, const Assignment& t) {
    return std::all_of(s.sets.begin(), s.sets.end(), [&](const Clause& c) { return true_count(c, t) == 1; });
}

SatResult sat3_decide(const Cnf3& f) {
    return enumerate(f.num_vars, [&](const Assignment& t) { return satisfies(f, t); });
}

SatResult nae3_decide(const Cnf3& f) {
    return enumerate(f.num_vars, [&](const Assignment& t) { return nae_satisfies(f, t); });
}

SatResult one_in_three_decide(const TripleSystem& s) {
    SatResult r = enumerate(s.num_vars, [&](const Assignment& t) { return one_in_three_satisfies(s, t); });
    if (r.satisfiable) {
        std::set<Literal> occurring;
        for (const Clause& c : s.sets) occurring.insert(c.begin(), c.end());
        for (const Literal& l : occurring)
            if (l.value(*r.assignment)) r.true_literals.push_back(l);
    }
    return r;
}

Cnf3 nae_closure(const Cnf3& f) {
    Cnf3 out = f;
    out.clauses.reserve(f.clauses.size() * 2);
    for (const Clause& c : f.clauses) out.clauses.push_back(Clause{~c[0], ~c[1], ~c[2]});
    return out;
}

MaxSatStats max_sat_stats(const Cnf3& f) {
    guard(f.num_vars);
    const int m = static_cast<int>(f.clauses.size());
    int best = 0;
    const std::uint32_t total = std::uint32_t{1} << f.num_vars;
    for (std::uint32_t bits = 0; bits < total && best < m; ++bits) {
        const Assignment t = decode(f.num_vars, bits);
        const int sat = static_cast<int>(
            std::count_if(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) { return true_count(c, t) > 0; }));
        best = std::max(best, sat);
    }
    return MaxSatStats{best, m - best};
}

Cnf3 pad_variables(const Cnf3& f, int min_vars) {
    Cnf3 out = f;
    out.num_vars = std::max(f.num_vars, min_vars);
    return out;
}

Cnf3 pad_literal_occurrences(const Cnf3& f) {
    std::vector<char> occurs(static_cast<std::size_t>(f.num_vars), 0);
    for (const Clause& c : f.clauses)
        for (const Literal& l : c) occurs[static_cast<std::size_t>(l.var)] = 1;
    if (std::all_of(occurs.begin(), occurs.end(), [](char o) { return o != 0; })) return f;
    if (f.num_vars < 2) throw Error(ErrorCode::PadFailure, "literal padding needs at least two variables");

    Cnf3 out = f;
    for (int x = 0; x < f.num_vars; ++x) {
        if (occurs[static_cast<std::size_t>(x)]) continue;
        const int y = x == 0 ? 1 : 0;
        out.clauses.push_back(Clause{Literal{x, false}, Literal{y, false}, Literal{y, true}});
    }
    if (f.num_vars <= kMaxOracleVars && nae3_decide(f).satisfiable != nae3_decide(out).satisfiable)
        throw Error(ErrorCode::PadFailure, "padding changed NAE satisfiability");
    return out;
}

}  // namespace domlab
