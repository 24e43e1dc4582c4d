#include "domlab/graph.hpp"

#include <algorithm>
#include <queue>

#include "domlab/error.hpp"

namespace domlab {

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

Graph Graph::relabeled(std::vector<std::string> labels) const {
    if (labels.size() != adj_.size())
        throw Error(ErrorCode::InvalidArgument, "label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, std::vector<std::string> labels) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    Graph g;
    g.adj_.resize(static_cast<std::size_t>(n));
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error(ErrorCode::EndpointOutOfRange,
                        "edge {" + std::to_string(a) + "," + std::to_string(b) + "} with n=" + std::to_string(n));
        if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
        throw Error(ErrorCode::DuplicateEdge,
                    "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} listed twice");
    for (const Edge& e : g.edges_) {
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    } else if (labels.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::InvalidArgument, "label count does not match vertex count");
    }
    g.labels_ = std::move(labels);
    return g;
}

DecoratedGraph make_decorated(Graph graph, std::vector<Triangle> triangles) {
    for (const Triangle& t : triangles) {
        if (!graph.has_edge(t[0], t[1]) || !graph.has_edge(t[1], t[2]) || !graph.has_edge(t[0], t[2]))
            throw Error(ErrorCode::InvalidArgument, "listed triple (" + std::to_string(t[0]) + "," +
                                                        std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                                        ") is not a triangle");
    }
    return DecoratedGraph{std::move(graph), std::move(triangles)};
}

std::vector<std::vector<Vertex>> Partition::classes() const {
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < class_of.size(); ++v) out[static_cast<std::size_t>(class_of[v])].push_back(static_cast<Vertex>(v));
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "degree statistics of the empty graph");
    DegreeStats s{g.degree(0), g.degree(0)};
    for (Vertex v = 1; v < g.order(); ++v) {
        s.min_deg = std::min(s.min_deg, g.degree(v));
        s.max_deg = std::max(s.max_deg, g.degree(v));
    }
    return s;
}

namespace {

std::vector<std::string> prefixed_labels(const Graph& a, const Graph& b) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(a.order() + b.order()));
    for (const auto& l : a.labels()) labels.push_back("A." + l);
    for (const auto& l : b.labels()) labels.push_back("B." + l);
    return labels;
}

Graph combine(const Graph& a, const Graph& b, bool cross) {
    const int na = a.order();
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(a.size() + b.size() + (cross ? static_cast<std::size_t>(na) * static_cast<std::size_t>(b.order()) : 0));
    for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
    for (const Edge& e : b.edges()) edges.emplace_back(e.u + na, e.v + na);
    if (cross)
        for (Vertex u = 0; u < na; ++u)
            for (Vertex v = 0; v < b.order(); ++v) edges.emplace_back(u, v + na);
    return build_graph(na + b.order(), edges, prefixed_labels(a, b));
}

}  // namespace

Graph join(const Graph& a, const Graph& b) { return combine(a, b, true); }

Graph disjoint_union(const Graph& a, const Graph& b) { return combine(a, b, false); }

bool is_dominating_set(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : set) {
        if (!g.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
        in[static_cast<std::size_t>(v)] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in[static_cast<std::size_t>(v)]) continue;
        const auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[static_cast<std::size_t>(w)] != 0; }))
            return false;
    }
    return true;
}

bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

bool is_two_colorable(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> q;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int connected_components(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack;
    int count = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++count;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return build_graph(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return build_graph(n, e);
}

Graph empty_graph(int n) { return build_graph(n, std::span<const std::pair<Vertex, Vertex>>{}); }

Graph star_graph(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return build_graph(leaves + 1, e);
}

Graph wheel_graph(int rim) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 1; v <= rim; ++v) {
        e.emplace_back(0, v);
        e.emplace_back(v, v % rim + 1);
    }
    return build_graph(rim + 1, e);
}

}  // namespace domlab
