#pragma once

#include <cstddef>

#include "drp/temporal_graph.h"

namespace drp {

// Query: is there an x-delay-robust route from s to z when delays have
// magnitude delta?
struct drp_instance {
  temporal_graph graph;
  vertex_id s{0};
  vertex_id z{0};
  std::size_t x{0};
  duration delta{0};
};

}  // namespace drp
