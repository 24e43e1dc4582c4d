#include "domlab/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "domlab/domatic.hpp"
#include "domlab/error.hpp"
#include "domlab/partition.hpp"

namespace domlab {
namespace {

// Accumulates vertices and edges; repeated edges collapse.
class GraphBuilder {
public:
    Vertex add_vertex(std::string label) {
        labels_.push_back(std::move(label));
        return static_cast<Vertex>(labels_.size() - 1);
    }

    void add_edge(Vertex u, Vertex v) { edges_.emplace_back(std::min(u, v), std::max(u, v)); }

    void add_clique(std::span<const Vertex> vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
    }

    void copy_graph(const Graph& g, const std::string& prefix) {
        const auto offset = static_cast<Vertex>(labels_.size());
        for (const auto& l : g.labels()) add_vertex(prefix + l);
        for (const Edge& e : g.edges()) add_edge(e.u + offset, e.v + offset);
    }

    [[nodiscard]] int order() const { return static_cast<int>(labels_.size()); }

    Graph build() {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        return build_graph(order(), edges_, labels_);
    }

private:
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::string> labels_;
};

void require_decorations(std::span<const DecoratedGraph> operands) {
    for (std::size_t i = 0; i < operands.size(); ++i)
        if (operands[i].triangles.empty())
            throw Error(ErrorCode::EmptyDecoration, "operand " + std::to_string(i + 1) + " has no decorated triangles");
}

void require_even(std::size_t count) {
    if (count < 2 || count % 2 != 0)
        throw Error(ErrorCode::OddLength, "need an even number (>= 2) of operands, got " + std::to_string(count));
}

std::vector<int> operand_offsets(std::span<const DecoratedGraph> operands) {
    std::vector<int> offsets(operands.size() + 1, 0);
    for (std::size_t i = 0; i < operands.size(); ++i) offsets[i + 1] = offsets[i] + operands[i].graph.order();
    return offsets;
}

Triangle shifted(const Triangle& t, int offset) { return {t[0] + offset, t[1] + offset, t[2] + offset}; }

std::string operand_prefix(std::size_t i) { return "H" + std::to_string(i + 1) + "."; }

// Visits every tuple of triangle indices, last operand fastest.
template <class F>
void for_each_tuple(std::span<const DecoratedGraph> operands, F&& visit) {
    std::vector<std::size_t> idx(operands.size(), 0);
    while (true) {
        visit(idx);
        std::size_t pos = operands.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < operands[pos].triangles.size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (operands.empty()) return;
    }
}

std::string tuple_label(const std::vector<std::size_t>& idx) {
    std::string out = "g(";
    for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i] + 1);
    return out + ")";
}

std::string literal_label(char var_letter, int var, bool negated) {
    return std::string(negated ? "~" : "") + var_letter + std::to_string(var + 1);
}

}  // namespace

DecoratedGraph kaplan_shamir(const Graph& g) {
    if (has_isolated_vertex(g)) throw Error(ErrorCode::IsolatedVertex, "Kaplan-Shamir input has an isolated vertex");
    if (is_two_colorable(g)) throw Error(ErrorCode::TwoColorable, "Kaplan-Shamir input is 2-colorable");

    GraphBuilder b;
    std::vector<Vertex> originals;
    for (Vertex v = 0; v < g.order(); ++v) originals.push_back(b.add_vertex("v" + std::to_string(v + 1)));
    b.add_clique(originals);

    std::vector<Triangle> triangles;
    for (const Edge& e : g.edges()) {
        const Vertex u = b.add_vertex("u" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1));
        b.add_edge(e.u, u);
        b.add_edge(u, e.v);
        triangles.push_back({e.u, u, e.v});
    }
    return make_decorated(b.build(), std::move(triangles));
}

Graph gadget_join(const DecoratedGraph& h1, const DecoratedGraph& h2) {
    const std::array<DecoratedGraph, 2> ops{h1, h2};
    require_decorations(ops);

    GraphBuilder b;
    b.copy_graph(h1.graph, "H1.");
    b.copy_graph(h2.graph, "H2.");
    const int shift = h1.graph.order();

    for (std::size_t i = 0; i < h1.triangles.size(); ++i) {
        for (std::size_t j = 0; j < h2.triangles.size(); ++j) {
            const Triangle t1 = h1.triangles[i];
            const Triangle t2 = shifted(h2.triangles[j], shift);
            const std::string name = "g(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ").a";
            std::array<Vertex, 6> a{};
            for (int p = 0; p < 6; ++p) a[static_cast<std::size_t>(p)] = b.add_vertex(name + std::to_string(p + 1));
            for (int p = 0; p < 3; ++p) {
                const int skip = GadgetSpec::missing[static_cast<std::size_t>(p)];
                for (int pos = 0; pos < 3; ++pos) {
                    // a_1..a_3: two of T1, all of T2.
                    if (pos != skip) b.add_edge(a[static_cast<std::size_t>(p)], t1[static_cast<std::size_t>(pos)]);
                    b.add_edge(a[static_cast<std::size_t>(p)], t2[static_cast<std::size_t>(pos)]);
                    // a_4..a_6: two of T2, all of T1.
                    if (pos != skip) b.add_edge(a[static_cast<std::size_t>(p + 3)], t2[static_cast<std::size_t>(pos)]);
                    b.add_edge(a[static_cast<std::size_t>(p + 3)], t1[static_cast<std::size_t>(pos)]);
                }
            }
        }
    }
    return b.build();
}

Graph multi_gadget_join(std::span<const DecoratedGraph> operands) {
    require_even(operands.size());
    require_decorations(operands);
    const auto offsets = operand_offsets(operands);
    const std::size_t count = operands.size();

    GraphBuilder b;
    for (std::size_t i = 0; i < count; ++i) b.copy_graph(operands[i].graph, operand_prefix(i));

    for_each_tuple(operands, [&](const std::vector<std::size_t>& idx) {
        std::vector<Triangle> tri(count);
        for (std::size_t i = 0; i < count; ++i) tri[i] = shifted(operands[i].triangles[idx[i]], offsets[i]);
        const std::string name = tuple_label(idx) + ".a";
        std::vector<Vertex> block;
        for (std::size_t p = 0; p < 3 * count; ++p) block.push_back(b.add_vertex(name + std::to_string(p + 1)));
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t p = 0; p < 3; ++p) {
                const Vertex a = block[3 * i + p];
                const auto skip = static_cast<std::size_t>(GadgetSpec::missing[p]);
                for (std::size_t j = 0; j < count; ++j)
                    for (std::size_t pos = 0; pos < 3; ++pos)
                        if (j != i || pos != skip) b.add_edge(a, tri[j][pos]);
            }
        }
    });
    return b.build();
}

DecoratedGraph times(const DecoratedGraph& h1, const DecoratedGraph& h2) {
    Graph joined = gadget_join(h1, h2);
    std::vector<Triangle> triangles = h1.triangles;
    for (const Triangle& t : h2.triangles) triangles.push_back(shifted(t, h1.graph.order()));
    return make_decorated(std::move(joined), std::move(triangles));
}

std::pair<DecoratedGraph, DecoratedGraph> parity_pair(std::span<const DecoratedGraph> operands) {
    require_even(operands.size());
    DecoratedGraph odd = operands[0];
    DecoratedGraph even = operands[1];
    for (std::size_t i = 2; i < operands.size(); i += 2) {
        odd = times(odd, operands[i]);
        even = times(even, operands[i + 1]);
    }
    return {std::move(odd), std::move(even)};
}

ExactSet exact_mk_set(int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "M_k needs k >= 1");
    std::vector<int> values;
    for (int v = 4 * k + 1; v <= 6 * k - 1; v += 2) values.push_back(v);
    return ExactSet::make(std::move(values));
}

Partition extend_domatic_partitions(std::span<const DecoratedGraph> operands, std::span<const Partition> partitions) {
    if (operands.size() != partitions.size())
        throw Error(ErrorCode::InvalidArgument, "one partition per operand required");
    const Graph joined = operands.size() == 2 ? gadget_join(operands[0], operands[1]) : multi_gadget_join(operands);
    const auto offsets = operand_offsets(operands);
    std::vector<int> class_offset(operands.size() + 1, 0);
    for (std::size_t i = 0; i < operands.size(); ++i) {
        if (partitions[i].class_of.size() != static_cast<std::size_t>(operands[i].graph.order()))
            throw Error(ErrorCode::PartitionMismatch, "partition " + std::to_string(i + 1) + " does not match its operand");
        class_offset[i + 1] = class_offset[i] + partitions[i].k;
    }

    Partition out{class_offset.back(), std::vector<int>(static_cast<std::size_t>(joined.order()), 0)};
    for (std::size_t i = 0; i < operands.size(); ++i)
        for (std::size_t v = 0; v < partitions[i].class_of.size(); ++v)
            out.class_of[static_cast<std::size_t>(offsets[i]) + v] = partitions[i].class_of[v] + class_offset[i];

    auto next = static_cast<std::size_t>(offsets.back());
    for_each_tuple(operands, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < operands.size(); ++i) {
            const Triangle& t = operands[i].triangles[idx[i]];
            const Partition& p = partitions[i];
            std::array<int, 3> tri_class{};
            for (std::size_t pos = 0; pos < 3; ++pos) tri_class[pos] = p.class_of[static_cast<std::size_t>(t[pos])];

            std::array<int, 3> chosen{-1, -1, -1};
            std::vector<char> covered(static_cast<std::size_t>(p.k), 0);
            // A class meeting the triangle only in the skipped vertex must take
            // that gadget vertex, otherwise nothing of it dominates the vertex.
            for (std::size_t gp = 0; gp < 3; ++gp) {
                const auto skip = static_cast<std::size_t>(GadgetSpec::missing[gp]);
                const int c = tri_class[skip];
                const auto hits = std::count(tri_class.begin(), tri_class.end(), c);
                if (hits == 1) {
                    chosen[gp] = c;
                    covered[static_cast<std::size_t>(c)] = 1;
                }
            }
            // Every class needs one of these vertices to reach the other
            // operands' triangles; leftovers join the first triangle class.
            for (std::size_t gp = 0; gp < 3; ++gp) {
                if (chosen[gp] != -1) continue;
                auto missing = std::find(covered.begin(), covered.end(), 0);
                const int c = missing != covered.end() ? static_cast<int>(missing - covered.begin()) : tri_class[0];
                chosen[gp] = c;
                covered[static_cast<std::size_t>(c)] = 1;
            }
            for (std::size_t gp = 0; gp < 3; ++gp)
                out.class_of[next + 3 * i + gp] = chosen[gp] + class_offset[i];
        }
        next += 3 * operands.size();
    });

    if (!check_partition(joined, out, SigmaRhoSpec::naturals(), SigmaRhoSpec::positive()))
        throw Error(ErrorCode::InvalidArgument, "extended partition does not dominate the gadget graph");
    return out;
}

Cnf3 nae_preprocess(const Cnf3& f) { return pad_literal_occurrences(pad_variables(f, 2)); }

Graph nae_construct(const Cnf3& h1, const Cnf3& h2) {
    const Cnf3 c = nae_closure(nae_preprocess(h1));
    const Cnf3 d = nae_closure(nae_preprocess(h2));
    const int n = c.num_vars;
    const int r = d.num_vars;

    GraphBuilder b;
    std::vector<Vertex> a, bb;
    for (int i = 0; i < 8; ++i) a.push_back(b.add_vertex("a" + std::to_string(i + 1)));
    for (int i = 0; i < 8; ++i) bb.push_back(b.add_vertex("b" + std::to_string(i + 1)));
    b.add_clique(a);
    b.add_clique(bb);

    // lit[v][0] = positive literal vertex, lit[v][1] = negated.
    auto literal_vertices = [&](int count, char letter, Vertex hub1, Vertex hub2) {
        std::vector<std::array<Vertex, 2>> lit;
        for (int v = 0; v < count; ++v) {
            std::array<Vertex, 2> pair{b.add_vertex(literal_label(letter, v, false)),
                                       b.add_vertex(literal_label(letter, v, true))};
            for (Vertex x : pair) {
                b.add_edge(x, hub1);
                b.add_edge(x, hub2);
            }
            lit.push_back(pair);
        }
        return lit;
    };
    const auto xs = literal_vertices(n, 'x', a[0], a[1]);
    const auto ys = literal_vertices(r, 'y', bb[0], bb[1]);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) {
            const Vertex u = b.add_vertex("u" + std::to_string(i + 1) + "," + std::to_string(j + 1));
            for (Vertex w : {xs[static_cast<std::size_t>(i)][0], xs[static_cast<std::size_t>(i)][1],
                             ys[static_cast<std::size_t>(j)][0], ys[static_cast<std::size_t>(j)][1]})
                b.add_edge(u, w);
        }

    auto clause_vertices = [&](const Cnf3& f, const std::vector<std::array<Vertex, 2>>& lit, const std::string& name,
                               Vertex hub1, Vertex hub2) {
        const std::size_t originals = f.clauses.size() / 2;
        for (std::size_t i = 0; i < f.clauses.size(); ++i) {
            const bool checked = i >= originals;
            const Vertex cv = b.add_vertex(name + (checked ? "~" : "") + std::to_string((checked ? i - originals : i) + 1));
            for (const Literal& l : f.clauses[i]) b.add_edge(cv, lit[static_cast<std::size_t>(l.var)][l.negated ? 1 : 0]);
            b.add_edge(cv, hub1);
            b.add_edge(cv, hub2);
        }
    };
    clause_vertices(c, xs, "c", a[0], a[1]);
    clause_vertices(d, ys, "d", bb[0], bb[1]);
    return b.build();
}

Graph ht_one_in_three(const TripleSystem& s) {
    for (const Clause& set : s.sets)
        for (const Literal& l : set)
            if (l.negated) throw Error(ErrorCode::NegativeLiteral, "literal " + std::to_string(l.to_signed()) + " is negative");

    GraphBuilder b;
    // clique_vertex[i][pos] stands for the pos-th member of set i.
    std::vector<std::array<Vertex, 3>> clique_vertex;
    std::vector<Vertex> anchors;
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        std::array<Vertex, 3> members{};
        for (std::size_t pos = 0; pos < 3; ++pos)
            members[pos] = b.add_vertex("S" + std::to_string(i + 1) + "." + literal_label('x', s.sets[i][pos].var, false));
        const Vertex anchor = b.add_vertex("S" + std::to_string(i + 1) + ".a");
        b.add_clique(std::array<Vertex, 4>{members[0], members[1], members[2], anchor});
        clique_vertex.push_back(members);
        anchors.push_back(anchor);
    }

    std::set<int> literals;
    for (const Clause& set : s.sets)
        for (const Literal& l : set) literals.insert(l.var);
    for (int var : literals) {
        const Vertex e1 = b.add_vertex("e_" + literal_label('x', var, false) + ".1");
        const Vertex e2 = b.add_vertex("e_" + literal_label('x', var, false) + ".2");
        b.add_edge(e1, e2);
        for (std::size_t i = 0; i < s.sets.size(); ++i)
            for (std::size_t pos = 0; pos < 3; ++pos)
                if (s.sets[i][pos].var == var) {
                    b.add_edge(e1, clique_vertex[i][pos]);
                    b.add_edge(e2, clique_vertex[i][pos]);
                }
    }

    const Vertex hub = b.add_vertex("s");
    std::array<Vertex, 4> top{hub, b.add_vertex("t1"), b.add_vertex("t2"), b.add_vertex("t3")};
    b.add_clique(top);
    for (Vertex anchor : anchors) b.add_edge(hub, anchor);
    return b.build();
}

Graph thm6_construct(const TripleSystem& s1, const TripleSystem& s2) {
    const Graph f1 = ht_one_in_three(s1);
    const Graph f2 = ht_one_in_three(s2);
    return join(disjoint_union(f1, f1), disjoint_union(f2, f2));
}

namespace {

bool alpha_matches_beta(const Graph& g, const Budget& budget) {
    const Deadline deadline(budget);
    const int a = alpha(g, deadline.remaining());
    const auto b = beta(g, deadline.remaining());
    return b && *b == a;
}

}  // namespace

bool beta_equals_alpha_check(const Graph& g, const TripleSystem& source, const Budget& budget) {
    if (!(g == ht_one_in_three(source)))
        throw Error(ErrorCode::NotAnImage, "graph is not the one-in-three image of the given system");
    return alpha_matches_beta(g, budget);
}

bool beta_equals_alpha_check(const Graph& g, const TripleSystem& s1, const TripleSystem& s2, const Budget& budget) {
    if (!(g == thm6_construct(s1, s2)))
        throw Error(ErrorCode::NotAnImage, "graph is not the joined one-in-three image of the given systems");
    return alpha_matches_beta(g, budget);
}

}  // namespace domlab
