#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drp/time.h"

namespace drp {

using vertex_id = std::uint32_t;
using arc_id = std::uint32_t;

// Broken caller contract (e.g. a route with a repeated vertex).
class contract_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Invalid input data; `index` names the offending element (arc index, line).
class validation_error : public std::runtime_error {
public:
  validation_error(std::string const& what, std::size_t index)
      : std::runtime_error{what}, index_{index} {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

// Exhaustive search would exceed its configured budget.
class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Scheduled connection src -> dst departing at t, arriving at t + lambda.
struct time_arc {
  vertex_id src{};
  vertex_id dst{};
  std::int64_t t{};
  std::int64_t lambda{};

  std::int64_t arrival() const { return t + lambda; }
  friend bool operator==(time_arc const&, time_arc const&) = default;
};

// Immutable temporal graph. Arcs keep their input order (arc ids are input
// positions); parallel identical arcs are distinct connections.
class temporal_graph {
public:
  temporal_graph() = default;
  temporal_graph(std::size_t vertex_count, std::vector<time_arc> arcs);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<time_arc const> arcs() const { return arcs_; }
  time_arc const& arc(arc_id id) const { return arcs_[id]; }

  // All arcs v -> w ordered by arrival, then departure, then input order.
  std::span<arc_id const> pair_arcs(vertex_id v, vertex_id w) const;

  // Sorted distinct departure times of v (tau_v^+).
  std::span<std::int64_t const> departures(vertex_id v) const;

  // Sorted distinct heads of arcs leaving v.
  std::span<vertex_id const> successors(vertex_id v) const;

  // Maximum time label, 0 without arcs.
  std::int64_t max_time() const { return max_time_; }

private:
  struct pair_range {
    std::uint32_t begin;
    std::uint32_t end;
  };

  std::size_t vertex_count_{0};
  std::vector<time_arc> arcs_;
  std::int64_t max_time_{0};

  // CSR over sources: successors_[succ_offsets_[v] .. succ_offsets_[v+1]) are
  // the heads of v, pair_ranges_ (same indexing) slice pair_order_.
  std::vector<std::uint32_t> succ_offsets_;
  std::vector<vertex_id> successors_;
  std::vector<pair_range> pair_ranges_;
  std::vector<arc_id> pair_order_;

  std::vector<std::uint32_t> dep_offsets_;
  std::vector<std::int64_t> departures_;
};

// Validating constructor. Throws validation_error naming the arc index.
temporal_graph build_graph(std::size_t vertex_count, std::vector<time_arc> arcs);

// Simple undirected graph.
class static_graph {
public:
  static_graph() = default;
  // Self-loops are dropped and parallel edges collapsed.
  static_graph(std::size_t vertex_count,
               std::vector<std::pair<vertex_id, vertex_id>> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  // Normalized edges (u < v), sorted.
  std::span<std::pair<vertex_id, vertex_id> const> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<vertex_id const> neighbors(vertex_id v) const;
  std::size_t degree(vertex_id v) const { return neighbors(v).size(); }
  bool has_edge(vertex_id u, vertex_id v) const;

private:
  std::size_t vertex_count_{0};
  std::vector<std::pair<vertex_id, vertex_id>> edges_;
  std::vector<std::uint32_t> adj_offsets_;
  std::vector<vertex_id> adj_;
};

static_graph underlying_graph(temporal_graph const&);

// Vertex sequence. Duplicate-freeness is checked by the consumers.
using route = std::vector<vertex_id>;

bool is_duplicate_free(std::span<vertex_id const>);

// Throws contract_error for an empty route, an out-of-range vertex or a
// repeated vertex.
void require_valid_route(temporal_graph const&, std::span<vertex_id const>);

enum class delay_kind { traversal, starting };

struct delay_set {
  std::vector<arc_id> arcs;  // sorted, unique
  delay_kind kind{delay_kind::traversal};
  duration delta{0};

  delay_set() = default;
  delay_set(std::vector<arc_id> delayed, delay_kind k, duration d);

  bool contains(arc_id) const;
  duration delay_of(arc_id a) const { return contains(a) ? delta : 0; }
};

// Whether `walk` is a D-delayed temporal walk under d's delay kind.
// Consecutive arcs must share endpoints, otherwise contract_error.
bool is_delayed_walk(temporal_graph const&, std::span<arc_id const> walk,
                     delay_set const& d);

}  // namespace drp
