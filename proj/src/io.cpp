#include "domlab/io.hpp"

#include <fstream>
#include <sstream>

#include "domlab/error.hpp"

namespace domlab {
namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Runs a schema accessor and maps nlohmann's exceptions to ParseError.
template <class F>
auto schema(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("JSON schema: ") + e.what());
    }
}

std::vector<Clause> clauses_from(const Json& arr) {
    std::vector<Clause> out;
    for (const auto& c : arr) {
        if (!c.is_array() || c.size() != 3) throw Error(ErrorCode::ParseError, "every clause needs exactly three literals");
        out.push_back(Clause{Literal::from_signed(c[0].get<int>()), Literal::from_signed(c[1].get<int>()),
                             Literal::from_signed(c[2].get<int>())});
    }
    return out;
}

Json clauses_to(const std::vector<Clause>& clauses) {
    Json arr = Json::array();
    for (const Clause& c : clauses) arr.push_back({c[0].to_signed(), c[1].to_signed(), c[2].to_signed()});
    return arr;
}

bool looks_like_dimacs(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string_view::npos && (text[first] == 'c' || text[first] == 'p');
}

}  // namespace

Graph read_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<int, long long>> header;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (header) parse_fail(line_no, "second header line");
            std::string format;
            long long n = 0;
            long long m = 0;
            if (!(ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0 || m < 0)
                parse_fail(line_no, "expected 'p edge <n> <m>'");
            header = {static_cast<int>(n), m};
        } else if (tag == "e") {
            if (!header) parse_fail(line_no, "edge before header");
            long long u = 0;
            long long v = 0;
            if (!(ls >> u >> v)) parse_fail(line_no, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > header->first || v > header->first)
                throw Error(ErrorCode::EndpointOutOfRange, "line " + std::to_string(line_no) + ": endpoint outside 1.." +
                                                               std::to_string(header->first));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            parse_fail(line_no, "unknown line type '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
    }
    if (!header) throw Error(ErrorCode::ParseError, "missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != header->second)
        throw Error(ErrorCode::HeaderMismatch, "header announces " + std::to_string(header->second) + " edges, found " +
                                                   std::to_string(edges.size()));
    return build_graph(header->first, edges);
}

std::string write_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
    return out;
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"n", g.order()}, {"edges", edges}, {"labels", g.labels()}};
}

Json decorated_to_json(const DecoratedGraph& d) {
    Json j = graph_to_json(d.graph);
    j["triangles"] = d.triangles;
    return j;
}

Graph graph_from_json(const Json& j) {
    auto [n, edges, labels] = schema([&] {
        std::vector<std::pair<Vertex, Vertex>> es;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edges must be [u, v] pairs");
            es.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        std::vector<std::string> ls;
        if (j.contains("labels")) ls = j.at("labels").get<std::vector<std::string>>();
        return std::tuple{j.at("n").get<int>(), es, ls};
    });
    if (n < 0) throw Error(ErrorCode::ParseError, "negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error(ErrorCode::ParseError, "label count differs from n");
    return build_graph(n, edges, labels);
}

DecoratedGraph decorated_from_json(const Json& j) {
    Graph g = graph_from_json(j);
    auto triangles = schema([&] {
        return j.contains("triangles") ? j.at("triangles").get<std::vector<Triangle>>() : std::vector<Triangle>{};
    });
    for (const Triangle& t : triangles)
        for (Vertex v : t)
            if (!g.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "triangle vertex " + std::to_string(v));
    return make_decorated(std::move(g), std::move(triangles));
}

Json partition_to_json(const Partition& p) { return Json{{"k", p.k}, {"class_of", p.class_of}}; }

Partition partition_from_json(const Json& j) {
    Partition p = schema([&] { return Partition{j.at("k").get<int>(), j.at("class_of").get<std::vector<int>>()}; });
    if (p.k < 1) throw Error(ErrorCode::ParseError, "partition needs k >= 1");
    for (int c : p.class_of)
        if (c < 0 || c >= p.k) throw Error(ErrorCode::ParseError, "class index " + std::to_string(c) + " outside 0..k-1");
    return p;
}

Json cnf3_to_json(const Cnf3& f) { return Json{{"num_vars", f.num_vars}, {"clauses", clauses_to(f.clauses)}}; }

Cnf3 cnf3_from_json(const Json& j) {
    auto [n, clauses] = schema([&] { return std::pair{j.at("num_vars").get<int>(), clauses_from(j.at("clauses"))}; });
    return make_cnf3(n, std::move(clauses));
}

Json triples_to_json(const TripleSystem& s) { return Json{{"num_vars", s.num_vars}, {"sets", clauses_to(s.sets)}}; }

TripleSystem triples_from_json(const Json& j) {
    auto [n, sets] = schema([&] { return std::pair{j.at("num_vars").get<int>(), clauses_from(j.at("sets"))}; });
    return make_triple_system(n, std::move(sets));
}

Json matrix_to_json(const TaskMatrix& m) { return Json{{"n", m.jobs()}, {"m", m.machines()}, {"rows", m.rows()}}; }

TaskMatrix matrix_from_json(const Json& j) {
    auto [n, m, rows] = schema([&] {
        return std::tuple{j.at("n").get<int>(), j.at("m").get<int>(), j.at("rows").get<std::vector<std::string>>()};
    });
    TaskMatrix out = TaskMatrix::from_rows(rows);
    if (out.jobs() != n || out.machines() != m) throw Error(ErrorCode::ParseError, "rows disagree with n and m");
    return out;
}

Json schedule_to_json(const Schedule& s) {
    Json arr = Json::array();
    for (const Task& t : s) arr.push_back({t.job, t.machine});
    return arr;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

Graph read_graph_text(std::string_view text) {
    return looks_like_dimacs(text) ? read_dimacs(text) : graph_from_json(parse_json(text));
}

DecoratedGraph read_decorated_text(std::string_view text) {
    if (looks_like_dimacs(text)) return DecoratedGraph{read_dimacs(text), {}};
    return decorated_from_json(parse_json(text));
}

}  // namespace domlab
