#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drp/instance.h"
#include "drp/route_verifier.h"

namespace drp::pareto {

// Componentwise a <= b. Throws contract_error on length mismatch.
bool dominates(arrival_vector const& a, arrival_vector const& b);

// Smallest departure time of w that is >= t; infinity if there is none.
ext_time round_up(temporal_graph const&, vertex_id w, ext_time t);

// One dynamic-program step from a prefix ending at v with vector `from` to
// w, followed by rounding every entry up to a departure time of w (unless
// `round` is false, which the search uses for the target). Empty if the
// extended prefix is not x-delay-robust.
std::optional<arrival_vector> extend(temporal_graph const&, vertex_id v,
                                     arrival_vector const& from, vertex_id w,
                                     duration delta, bool round = true);

struct options {
  // Drop labels dominated by a stored label at the same vertex. Disabling it
  // enumerates every robust simple prefix; only useful for testing.
  bool prune{true};
};

struct result {
  route path;
  arrival_vector arrival;  // worst-case arrival vector at z
};

struct stats {
  std::size_t labels_created{0};
  std::size_t labels_expanded{0};
  std::vector<std::size_t> max_front_size;  // per vertex, over the run
};

std::optional<result> solve(drp_instance const&, options const& = {},
                            stats* = nullptr);

}  // namespace drp::pareto
