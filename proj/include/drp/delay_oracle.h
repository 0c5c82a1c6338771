#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drp/instance.h"
#include "drp/route_verifier.h"
#include "drp/temporal_graph.h"

// Exhaustive reference implementations. Everything here enumerates delay
// sets, arc sequences or simple paths directly and is only meant for
// desk-sized instances; hard budgets turn oversized inputs into
// budget_exceeded instead of hanging.
namespace drp::oracle {

struct budget {
  std::uint64_t max_delay_sets{10'000'000};
  std::uint64_t max_paths{1'000'000};
  std::uint64_t max_arc_sequences{1'000'000};
};

// Arcs between consecutive route vertices, in route order.
std::vector<arc_id> relevant_arcs(temporal_graph const&,
                                  std::span<vertex_id const> r);

// Forward pass taking the earliest usable arc per hop under d.
ext_time greedy_delayed_arrival(temporal_graph const&,
                                std::span<vertex_id const> r,
                                delay_set const& d);

// Minimum final arrival over every arc sequence following r that passes
// is_delayed_walk. Throws budget_exceeded if the sequence count is too big.
ext_time enumerate_delayed_arrival(temporal_graph const&,
                                   std::span<vertex_id const> r,
                                   delay_set const& d, budget const& = {});

// Earliest D-delayed arrival along r (infinity if r breaks). Starting delays
// on routes of at most five hops are cross-checked against full enumeration,
// which wins on disagreement.
ext_time earliest_delayed_arrival(temporal_graph const&,
                                  std::span<vertex_id const> r,
                                  delay_set const& d);

// Number of delay sets of size <= x over m arcs, saturating at UINT64_MAX.
std::uint64_t delay_set_count(std::size_t m, std::size_t x);

// worst[y] = max over |D| <= y of the earliest delayed arrival.
arrival_vector brute_force_worst_case(temporal_graph const&,
                                      std::span<vertex_id const> r,
                                      std::size_t x, duration delta,
                                      delay_kind kind, budget const& = {});

bool brute_force_robust(temporal_graph const&, std::span<vertex_id const> r,
                        std::size_t x, duration delta, delay_kind kind,
                        budget const& = {});

// Some delay set of size <= x over the relevant arcs that breaks r.
std::optional<delay_set> find_breaking_set(temporal_graph const&,
                                           std::span<vertex_id const> r,
                                           std::size_t x, duration delta,
                                           delay_kind kind, budget const& = {});

// Drops arcs from a breaking set while it keeps breaking r; the result is
// inclusion-minimal.
delay_set shrink_breaking_set(temporal_graph const&,
                              std::span<vertex_id const> r, delay_set d);

// All simple s-z paths of the underlying graph, neighbors in ascending order.
std::vector<route> simple_paths(static_graph const&, vertex_id s, vertex_id z,
                                budget const& = {});

// First robust route among all simple s-z paths of the underlying graph.
std::optional<route> brute_force_solve(drp_instance const&, budget const& = {});

}  // namespace drp::oracle
