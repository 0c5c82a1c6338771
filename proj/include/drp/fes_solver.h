#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "drp/instance.h"
#include "drp/temporal_graph.h"

namespace drp::fes {

using edge = std::pair<vertex_id, vertex_id>;

// Repeatedly removes edges of vertices (other than s and z) with degree <= 1.
// Vertex ids are kept; removed vertices end up isolated.
static_graph prune_degree_one(static_graph const&, vertex_id s, vertex_id z);

// Complement of a BFS spanning forest; normalized (u < v) and sorted.
std::vector<edge> minimum_feedback_edge_set(static_graph const&);

struct path_decomposition {
  static_graph graph;                     // pruned underlying graph
  std::vector<vertex_id> branch_vertices; // sorted
  std::vector<edge> feedback_edges;
  // Paths of the forest graph - F between branch vertices; interiors have
  // degree two. Together they cover every forest edge exactly once.
  std::vector<std::vector<vertex_id>> maximal_paths;
};

path_decomposition decompose(static_graph const& pruned, vertex_id s,
                             vertex_id z);

// Calls `visit` for every simple s-z path of dec.graph, built from feedback
// edges and maximal paths. Stops when `visit` returns false.
void enumerate_candidate_routes(path_decomposition const&, vertex_id s,
                                vertex_id z,
                                std::function<bool(route const&)> const& visit);

struct result {
  std::optional<route> path;
  std::size_t feedback_edge_number{0};
  std::size_t candidates_checked{0};
};

result solve(drp_instance const&);

// Feedback edge number of the underlying graph after degree-one pruning.
std::size_t feedback_edge_number(drp_instance const&);

}  // namespace drp::fes
