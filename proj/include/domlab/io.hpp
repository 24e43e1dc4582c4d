#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "domlab/cfsp.hpp"
#include "domlab/graph.hpp"
#include "domlab/sat.hpp"

namespace domlab {

using Json = nlohmann::json;

/// `p edge n m` header, then `e u v` lines with 1-based ids; `c` lines are
/// comments. Throws ParseError (with line number), HeaderMismatch, or the
/// build_graph errors.
Graph read_dimacs(std::string_view text);
/// Canonical form: header, then edges in lexicographic order.
std::string write_dimacs(const Graph& g);

// {"n", "edges": [[u,v],...], "labels"?, "triangles"?}, 0-based ids.
Json graph_to_json(const Graph& g);
Json decorated_to_json(const DecoratedGraph& d);
Graph graph_from_json(const Json& j);
/// Missing "triangles" yields an empty decoration.
DecoratedGraph decorated_from_json(const Json& j);

// {"k", "class_of"}.
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"num_vars", "clauses"} / {"num_vars", "sets"} with 1-based signed literals.
Json cnf3_to_json(const Cnf3& f);
Cnf3 cnf3_from_json(const Json& j);
Json triples_to_json(const TripleSystem& s);
TripleSystem triples_from_json(const Json& j);

// {"n", "m", "rows": ["0110", ...]}.
Json matrix_to_json(const TaskMatrix& m);
TaskMatrix matrix_from_json(const Json& j);

Json schedule_to_json(const Schedule& s);

/// Parses JSON text; syntax and schema problems become ParseError.
Json parse_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// DIMACS when the text starts with a `c` or `p` line, JSON otherwise.
Graph read_graph_text(std::string_view text);
DecoratedGraph read_decorated_text(std::string_view text);

}  // namespace domlab
