#pragma once

#include <cstdint>
#include <vector>

#include "domlab/cfsp.hpp"
#include "domlab/graph.hpp"
#include "domlab/sat.hpp"

namespace domlab {

// Seeded instance generators; equal arguments give equal instances.

/// G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

/// Clauses over `num_vars` variables, members drawn with replacement.
Cnf3 random_cnf3(int num_vars, int clauses, std::uint64_t seed);

/// Positive sets of three distinct variables (num_vars >= 3).
TripleSystem random_triples(int num_vars, int sets, std::uint64_t seed);

TaskMatrix random_matrix(int n, int m, double density, std::uint64_t seed);

/// One representative per isomorphism class, for every order 1..max_n
/// (max_n <= 6). Representatives are the lexicographically smallest
/// adjacency encodings, ordered by order then encoding.
std::vector<Graph> nonisomorphic_graphs(int max_n);

/// Every task matrix with exactly n rows and m columns (n * m <= 20),
/// in binary counting order over the row-major cells.
std::vector<TaskMatrix> all_matrices(int n, int m);

}  // namespace domlab
