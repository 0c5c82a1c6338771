#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "drp/reductions.h"
#include "drp/temporal_graph.h"

namespace drp::io {

// Parse failures carry the 1-based line number as index().
class parse_error : public validation_error {
public:
  using validation_error::validation_error;
};

struct graph_file {
  temporal_graph graph;
  std::map<vertex_id, std::string> names;
};

// Format:
//   temporal <n> <m>
//   arc <src> <dst> <t> <lambda>     (m times)
//   name <id> <token>                (optional)
// Blank lines and lines starting with '#' are ignored.
graph_file read_graph(std::istream&);
graph_file read_graph_file(std::filesystem::path const&);
void write_graph(std::ostream&, graph_file const&);

// Vertex by numeric id or by name; nullopt if neither matches.
std::optional<vertex_id> resolve_vertex(graph_file const&, std::string_view token);
std::string vertex_label(graph_file const&, vertex_id);

// DIMACS CNF ("p cnf <vars> <clauses>", zero-terminated clauses).
reductions::cnf_instance read_dimacs(std::istream&);

// Multicolored graph:
//   mcc <k>
//   class <i> <size>        (1-based class, once per class)
//   edge <i> <a> <j> <b>    (vertex a of class i, vertex b of class j; 1-based)
reductions::multicolored_graph read_mcc(std::istream&);

}  // namespace drp::io
