#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace domlab {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u{};
    Vertex v{};

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; every
/// structural operation returns a new value.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] int order() const noexcept { return static_cast<int>(adj_.size()); }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }

    /// Edges in lexicographic order.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    [[nodiscard]] bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }

    /// Same structure, different vertex labels. Size must match order().
    [[nodiscard]] Graph relabeled(std::vector<std::string> labels) const;

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

private:
    friend Graph build_graph(int, std::span<const std::pair<Vertex, Vertex>>, std::vector<std::string>);

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

/// Validates and builds a graph. Labels default to the vertex index.
/// Throws SelfLoop, DuplicateEdge or EndpointOutOfRange.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, std::vector<std::string> labels = {});

inline Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

/// A distinguished triangle (left, mid, right); for Kaplan-Shamir images the
/// roles are (v_i, u_ij, v_j).
using Triangle = std::array<Vertex, 3>;

/// A graph plus an ordered list of distinguished triangles.
struct DecoratedGraph {
    Graph graph;
    std::vector<Triangle> triangles;

    bool operator==(const DecoratedGraph&) const = default;
};

/// Throws InvalidArgument unless every listed triple induces a triangle.
DecoratedGraph make_decorated(Graph graph, std::vector<Triangle> triangles);

/// Assignment of every vertex to one of k classes; empty classes are legal.
struct Partition {
    int k{0};
    std::vector<int> class_of;

    [[nodiscard]] std::vector<std::vector<Vertex>> classes() const;
    bool operator==(const Partition&) const = default;
};

struct DegreeStats {
    int min_deg{0};
    int max_deg{0};
    bool operator==(const DegreeStats&) const = default;
};

/// Throws EmptyGraph on n == 0.
DegreeStats degree_stats(const Graph& g);

/// A keeps ids 0..n_A-1, B is shifted by n_A. Labels get "A." / "B." prefixes.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Throws VertexOutOfRange for members outside V(G).
bool is_dominating_set(const Graph& g, std::span<const Vertex> set);

bool has_isolated_vertex(const Graph& g);
bool is_two_colorable(const Graph& g);
int connected_components(const Graph& g);

// Named graphs used throughout tests and corpora.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);
/// Hub vertex 0 joined to a cycle on `rim` vertices.
Graph wheel_graph(int rim);

}  // namespace domlab
