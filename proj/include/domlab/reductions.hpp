#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "domlab/budget.hpp"
#include "domlab/exact_set.hpp"
#include "domlab/graph.hpp"
#include "domlab/sat.hpp"

namespace domlab {

/// Adjacency pattern of the six-vertex gadget between triangles
/// T1 = (v_q, u_qr, v_r) and T2 = (v_s, u_st, v_t).
///
/// a_1, a_2, a_3 belong to T1: each is adjacent to all of T2 and to T1
/// except one vertex (a_1 misses v_r, a_2 misses u_qr, a_3 misses v_q).
/// a_4, a_5, a_6 mirror this for T2. There are no gadget-gadget edges, and
/// every gadget vertex has degree 5.
struct GadgetSpec {
    /// Position inside the own triangle that gadget vertex p (0..2) skips.
    static constexpr std::array<int, 3> missing{2, 1, 0};
};

/// Kaplan-Shamir image: original vertices become a clique and each edge
/// {v_i, v_j} gets a new vertex u_ij adjacent to both ends. Triangles
/// (v_i, u_ij, v_j) are recorded in lexicographic edge order.
/// Throws IsolatedVertex or TwoColorable.
DecoratedGraph kaplan_shamir(const Graph& g);

/// H1 and H2 side by side plus one fresh gadget for every triangle pair,
/// pairs enumerated lexicographically. Throws EmptyDecoration.
Graph gadget_join(const DecoratedGraph& h1, const DecoratedGraph& h2);

/// Generalisation to 2k operands: one block of 6k gadget vertices for every
/// tuple of triangles (lexicographic), the three vertices of operand i
/// attached to T_i as in the pair gadget and to every other T_j completely.
/// Gadget vertices end up with degree 6k - 1. Throws OddLength or
/// EmptyDecoration.
Graph multi_gadget_join(std::span<const DecoratedGraph> operands);

/// gadget_join decorated with both operands' triangles (H2's shifted).
DecoratedGraph times(const DecoratedGraph& h1, const DecoratedGraph& h2);

/// Left folds of times over the odd- and even-numbered operands (1-based).
std::pair<DecoratedGraph, DecoratedGraph> parity_pair(std::span<const DecoratedGraph> operands);

/// {4k+1, 4k+3, ..., 6k-1}.
ExactSet exact_mk_set(int k);

/// Extends domatic partitions of the operands to the multi-gadget graph:
/// class j of operand i takes the gadget vertex whose skipped triangle
/// vertex is the class's only member in that triangle, and every class gets
/// at least one of its operand's three gadget vertices per block. The result
/// has sum(k_i) classes; throws InvalidArgument if it fails to dominate.
Partition extend_domatic_partitions(std::span<const DecoratedGraph> operands, std::span<const Partition> partitions);

/// Preprocessing applied to each side of nae_construct: at least two
/// variables, every variable used by some clause.
Cnf3 nae_preprocess(const Cnf3& f);

/// Graph whose total domatic number encodes NAE satisfiability of the pair:
/// 4 if both sides are NAE-satisfiable, 3 if only the first one, 2 if none.
/// Vertex order: a_1..a_8, b_1..b_8, x_i/¬x_i pairs, y_j/¬y_j pairs, u_ij
/// (row-major), clause vertices of C = Ĉ ∪ Č, then of D = D̂ ∪ Ď. Both inputs
/// are preprocessed with nae_preprocess first.
Graph nae_construct(const Cnf3& h1, const Cnf3& h2);

/// 4-clique {x_i, y_i, z_i, a_i} per set, an edge e_x per distinct literal
/// whose endpoints both see every clique vertex standing for x, and a
/// 4-clique {s, t_1, t_2, t_3} with s adjacent to every a_i.
/// alpha is 2 on one-in-three satisfiable systems and 3 otherwise.
/// Throws NegativeLiteral.
Graph ht_one_in_three(const TripleSystem& s);

/// (f(S1) ∪ f(S1)) ⊕ (f(S2) ∪ f(S2)) with f = ht_one_in_three.
Graph thm6_construct(const TripleSystem& s1, const TripleSystem& s2);

/// alpha(G) == beta(G) for G = ht_one_in_three(source). Throws NotAnImage
/// when G is not that image.
bool beta_equals_alpha_check(const Graph& g, const TripleSystem& source, const Budget& budget = Budget::unlimited());
/// Same for G = thm6_construct(s1, s2).
bool beta_equals_alpha_check(const Graph& g, const TripleSystem& s1, const TripleSystem& s2,
                             const Budget& budget = Budget::unlimited());

}  // namespace domlab
