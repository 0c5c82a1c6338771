#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "drp/instance.h"

namespace drp::gen {

// "key=value" pairs separated by spaces or commas, e.g. "n=20 arcs=60 seed=7".
// Throws std::invalid_argument for malformed pairs, unknown keys or
// non-integer values.
std::map<std::string, std::int64_t> parse_spec(
    std::string_view spec, std::initializer_list<std::string_view> allowed);

struct random_params {
  std::size_t n{8};
  std::size_t arcs{16};
  std::int64_t tmax{10};    // departure times drawn from [0, tmax]
  std::int64_t lambda{2};   // traversal times drawn from [0, lambda]
  std::size_t x{1};
  duration delta{1};
  std::uint64_t seed{1};
};

random_params parse_random_params(std::string_view spec);

// Uniform arcs between distinct vertices; s = 0, z = n - 1. Deterministic in
// the parameters.
drp_instance random_instance(random_params const&);

}  // namespace drp::gen
