#pragma once

#include <array>
#include <optional>
#include <vector>

namespace domlab {

/// Variable index (0-based) plus polarity.
struct Literal {
    int var{0};
    bool negated{false};

    [[nodiscard]] Literal operator~() const { return {var, !negated}; }
    [[nodiscard]] bool value(const std::vector<bool>& assignment) const {
        return assignment[static_cast<std::size_t>(var)] != negated;
    }
    /// +(var+1) / -(var+1).
    [[nodiscard]] int to_signed() const { return negated ? -(var + 1) : var + 1; }
    static Literal from_signed(int lit);

    auto operator<=>(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF formula. Repeated literals inside a clause are allowed.
struct Cnf3 {
    int num_vars{0};
    std::vector<Clause> clauses;

    bool operator==(const Cnf3&) const = default;
};

/// Throws InvalidArgument when a literal names a variable >= num_vars.
Cnf3 make_cnf3(int num_vars, std::vector<Clause> clauses);

/// Collection of 3-member literal multisets.
struct TripleSystem {
    int num_vars{0};
    std::vector<Clause> sets;

    bool operator==(const TripleSystem&) const = default;
};

TripleSystem make_triple_system(int num_vars, std::vector<Clause> sets);

using Assignment = std::vector<bool>;

struct SatResult {
    bool satisfiable{false};
    std::optional<Assignment> assignment;
    /// For one-in-three: the true literals among those occurring in the system.
    std::vector<Literal> true_literals;
};

/// Largest variable count the enumeration oracles accept.
inline constexpr int kMaxOracleVars = 24;

bool satisfies(const Cnf3& f, const Assignment& t);
/// Every clause has a true and a false literal.
bool nae_satisfies(const Cnf3& f, const Assignment& t);
/// |T ∩ S_i| = 1 for every set, counting repeated members with multiplicity.
bool one_in_three_satisfies(const TripleSystem& s, const Assignment& t);

// Exhaustive over 2^num_vars assignments; throw TooLarge beyond 24 variables.
SatResult sat3_decide(const Cnf3& f);
SatResult nae3_decide(const Cnf3& f);
SatResult one_in_three_decide(const TripleSystem& s);

/// Originals followed by their literal-wise negations (2m clauses).
Cnf3 nae_closure(const Cnf3& f);

struct MaxSatStats {
    int satisfied{0};    // s: most clauses satisfiable at once
    int unsatisfied{0};  // u: fewest clauses left unsatisfied

    bool operator==(const MaxSatStats&) const = default;
};

MaxSatStats max_sat_stats(const Cnf3& f);

/// Adds fresh variables until there are at least `min_vars`.
Cnf3 pad_variables(const Cnf3& f, int min_vars = 2);

/// Appends (x ∨ y ∨ ¬y) for every variable x occurring in no clause, with y
/// another variable. Such clauses are NAE-true under every assignment, and
/// together with nae_closure every literal then occurs in some clause.
/// The result is checked against the NAE oracle; throws PadFailure if the
/// padding changed NAE satisfiability or fewer than two variables exist.
Cnf3 pad_literal_occurrences(const Cnf3& f);

}  // namespace domlab
