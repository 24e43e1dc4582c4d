#pragma once

#include <optional>
#include <vector>

#include "domlab/budget.hpp"
#include "domlab/exact_set.hpp"
#include "domlab/graph.hpp"
#include "domlab/partition.hpp"

namespace domlab {

// Graph parameters defined through (k, sigma, rho)-partitions. All of them
// throw Error(TimedOut) when the budget runs out before the answer is exact.

/// Domatic number: max k with a (k, N, N+)-partition. Throws EmptyGraph.
int domatic_number(const Graph& g, const Budget& budget = Budget::unlimited());

/// Total domatic number: max k with a (k, N+, N+)-partition; nullopt when
/// even k = 1 fails (isolated vertex).
std::optional<int> gamma(const Graph& g, const Budget& budget = Budget::unlimited());

/// min k with a (k, {0,1}, N)-partition.
int alpha(const Graph& g, const Budget& budget = Budget::unlimited());

/// min k with a (k, {1}, N)-partition; nullopt when none exists.
std::optional<int> beta(const Graph& g, const Budget& budget = Budget::unlimited());

/// min k with a (k, {0}, N)-partition.
int chromatic_number(const Graph& g, const Budget& budget = Budget::unlimited());

/// Membership in the exact version of (k, sigma, rho)-Partition: level k but
/// not level k-1 for minimum problems (k >= 2), level k but not k+1 for
/// maximum problems (k >= 1). Throws NotMonotone for other pairs.
bool exact_partition_decision(const Graph& g, int k, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho,
                              const Budget& budget = Budget::unlimited());

/// delta(G) in the given set; ExactSet construction already rejected
/// contiguous members.
bool exact_domatic_in_set(const Graph& g, const ExactSet& values, const Budget& budget = Budget::unlimited());

bool dnp_odd(const Graph& g, const Budget& budget = Budget::unlimited());
bool dnp_equ(const Graph& g, const Graph& h, const Budget& budget = Budget::unlimited());
bool dnp_geq(const Graph& g, const Graph& h, const Budget& budget = Budget::unlimited());

/// Size of a greedily grown clique; a cheap lower bound for the minimum
/// problems above.
int greedy_clique_size(const Graph& g);

}  // namespace domlab
