#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "drp/temporal_graph.h"
#include "drp/time.h"

namespace drp {

// Worst-case arrival times indexed by delay budget 0..x. Nondecreasing.
using arrival_vector = std::vector<ext_time>;

// One arrival vector per route prefix (rows[j] belongs to the prefix ending
// at the j-th route vertex).
struct worst_case_table {
  std::vector<arrival_vector> rows;
  std::size_t x{0};
  duration delta{0};

  arrival_vector const& final_row() const { return rows.back(); }
  bool robust() const { return final_row()[x].is_finite(); }

  struct breakpoint {
    std::size_t prefix;  // index of the first route vertex that can be missed
    std::size_t budget;  // smallest number of delays that achieves it
  };
  // First prefix whose row contains infinity, with the least budget there.
  std::optional<breakpoint> first_break() const;
};

// Arcs v -> w departing no earlier than t, ordered by arrival.
std::vector<arc_id> available_arcs(temporal_graph const&, vertex_id v,
                                   vertex_id w, ext_time t);

// Latest time w is reached from v when starting at t and up to y of the
// available arcs are delayed by delta: the earliest arrival if the first y
// arcs (by arrival) are delayed. Infinity when no arc is available.
ext_time worst_case_step(temporal_graph const&, vertex_id v, vertex_id w,
                         ext_time t, std::size_t y, duration delta);

// Same as above over an already arrival-sorted arc list (pair_arcs order).
ext_time worst_case_step(temporal_graph const&, std::span<arc_id const> pair,
                         ext_time t, std::size_t y, duration delta);

// Row for prefix + (w) from the row of a prefix ending at v:
// next[y] = max over y' <= y of worst_case_step(v, w, prev[y'], y - y').
arrival_vector next_row(temporal_graph const&, vertex_id v, vertex_id w,
                        arrival_vector const& prev, duration delta);

// Dynamic program along the route, starting from `start_row` at r[0].
worst_case_table compute_worst_case_table(temporal_graph const&,
                                          std::span<vertex_id const> r,
                                          arrival_vector start_row,
                                          duration delta);

// Dynamic program starting at time 0 (the standard table) or at `start`.
worst_case_table compute_worst_case_table(temporal_graph const&,
                                          std::span<vertex_id const> r,
                                          std::size_t x, duration delta,
                                          ext_time start = ext_time{0});

// x-delay-robustness of a duplicate-free route. Throws contract_error for
// repeated or out-of-range vertices.
bool is_delay_robust(temporal_graph const&, std::span<vertex_id const> r,
                     std::size_t x, duration delta);

}  // namespace drp
