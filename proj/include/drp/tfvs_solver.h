#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drp/instance.h"
#include "drp/route_verifier.h"
#include "drp/temporal_graph.h"

namespace drp::tfvs {

struct appearance {
  vertex_id vertex{};
  std::int64_t t{};
  friend auto operator<=>(appearance const&, appearance const&) = default;
};

// Sorted, unique.
using timed_fvs = std::vector<appearance>;

// Drops arcs (v, w, t, l) with (v, t) or (w, t) in X. Vertex ids are kept.
temporal_graph remove_appearances(temporal_graph const&, timed_fvs const& X);

bool is_timed_fvs(temporal_graph const&, timed_fvs const& X);

struct search_budget {
  std::uint64_t max_nodes{2'000'000};
};

// Smallest timed feedback vertex set with at most max_size appearances;
// empty if none exists within that size. Throws budget_exceeded when the
// search tree outgrows the budget.
std::optional<timed_fvs> minimum_tfvs(temporal_graph const&,
                                      std::size_t max_size,
                                      search_budget const& = {});

// Minimum timed feedback vertex set. Throws budget_exceeded (telling the
// caller to pass X explicitly) if the exact search is too large.
timed_fvs compute_tfvs(temporal_graph const&, search_budget const& = {});

// {t, t + delta | (w, t) in X} plus arrival times t + l and t + l + delta of
// every arc removed by X, plus infinity. Sorted.
std::vector<ext_time> relevant_times(temporal_graph const&, timed_fvs const& X,
                                     duration delta);

// Least element of `times` that is >= t.
ext_time round_to(std::span<ext_time const> times, ext_time t);

// Worst-case arrival vector at the end of r when the route is entered with
// arrival vector `from` (entry i: start time for i delays already spent).
arrival_vector propagate(temporal_graph const&, std::span<vertex_id const> r,
                         arrival_vector const& from, duration delta);

// True iff prof_z[j] is the least relevant time bounding, for all i <= j,
// the worst-case arrival at r's end with j - i delays when r is started at
// prof_s[i]. Profiles have one entry per budget 0..x.
bool check_route(temporal_graph const&, std::span<vertex_id const> r,
                 arrival_vector const& prof_s, arrival_vector const& prof_z,
                 duration delta, std::span<ext_time const> times);

struct result {
  std::optional<route> path;
  timed_fvs fvs;
  std::size_t segments_checked{0};
};

// Decides the instance. Uses X when given, compute_tfvs otherwise. Throws
// contract_error if a supplied X is not a timed feedback vertex set.
result solve(drp_instance const&, std::optional<timed_fvs> X = std::nullopt,
             search_budget const& = {});

}  // namespace drp::tfvs
