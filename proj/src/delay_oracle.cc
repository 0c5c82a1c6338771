#include "drp/delay_oracle.h"

#include <algorithm>
#include <limits>

#include "fmt/core.h"

namespace drp::oracle {

namespace {

// Calls f(subset) for every subset of `items` with at most k elements, in
// order of increasing size. Stops early when f returns false.
template <typename F>
bool for_each_subset(std::span<arc_id const> items, std::size_t const k, F&& f) {
  auto chosen = std::vector<arc_id>{};
  auto rec = [&](auto&& self, std::size_t const from,
                 std::size_t const remaining) -> bool {
    if (remaining == 0) {
      return f(std::span<arc_id const>{chosen});
    }
    for (auto i = from; i + remaining <= items.size(); ++i) {
      chosen.push_back(items[i]);
      auto const go_on = self(self, i + 1, remaining - 1);
      chosen.pop_back();
      if (!go_on) {
        return false;
      }
    }
    return true;
  };
  for (auto size = std::size_t{0}; size <= std::min(k, items.size()); ++size) {
    if (!rec(rec, 0, size)) {
      return false;
    }
  }
  return true;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

std::vector<arc_id> relevant_arcs(temporal_graph const& g,
                                  std::span<vertex_id const> r) {
  auto out = std::vector<arc_id>{};
  for (auto i = std::size_t{1}; i < r.size(); ++i) {
    auto const pair = g.pair_arcs(r[i - 1], r[i]);
    out.insert(end(out), begin(pair), end(pair));
  }
  return out;
}

ext_time greedy_delayed_arrival(temporal_graph const& g,
                                std::span<vertex_id const> r,
                                delay_set const& d) {
  auto current = ext_time{0};
  for (auto i = std::size_t{1}; i < r.size(); ++i) {
    auto best = ext_time::inf();
    for (auto const a : g.pair_arcs(r[i - 1], r[i])) {
      auto const& arc = g.arc(a);
      auto const shift = d.delay_of(a);
      auto const departure = d.kind == delay_kind::starting
                                 ? ext_time{arc.t} + shift
                                 : ext_time{arc.t};
      if (departure < current) {
        continue;
      }
      best = std::min(best, ext_time{arc.arrival()} + shift);
    }
    if (best.is_inf()) {
      return best;
    }
    current = best;
  }
  return current;
}

ext_time enumerate_delayed_arrival(temporal_graph const& g,
                                   std::span<vertex_id const> r,
                                   delay_set const& d, budget const& b) {
  if (r.size() <= 1) {
    return ext_time{0};
  }
  auto sequences = std::uint64_t{1};
  for (auto i = std::size_t{1}; i < r.size(); ++i) {
    sequences = saturating_mul(sequences, g.pair_arcs(r[i - 1], r[i]).size());
  }
  if (sequences > b.max_arc_sequences) {
    throw budget_exceeded{fmt::format(
        "instance too large for oracle: {} arc sequences", sequences)};
  }

  auto best = ext_time::inf();
  auto walk = std::vector<arc_id>(r.size() - 1);
  auto rec = [&](auto&& self, std::size_t const hop) -> void {
    if (hop == walk.size()) {
      // The walk starts at time 0: under starting delays the first arc's
      // shifted departure is never negative, so only the chain matters.
      if (is_delayed_walk(g, walk, d)) {
        auto const& last = g.arc(walk.back());
        best = std::min(best, ext_time{last.arrival()} + d.delay_of(walk.back()));
      }
      return;
    }
    for (auto const a : g.pair_arcs(r[hop], r[hop + 1])) {
      walk[hop] = a;
      self(self, hop + 1);
    }
  };
  rec(rec, 0);
  return best;
}

ext_time earliest_delayed_arrival(temporal_graph const& g,
                                  std::span<vertex_id const> r,
                                  delay_set const& d) {
  auto const greedy = greedy_delayed_arrival(g, r, d);
  if (d.kind == delay_kind::starting && r.size() >= 2 && r.size() - 1 <= 5) {
    try {
      auto const exact = enumerate_delayed_arrival(g, r, d);
      if (exact != greedy) {
        return exact;
      }
    } catch (budget_exceeded const&) {
      // Too many sequences to cross-check; greedy stands.
    }
  }
  return greedy;
}

std::uint64_t delay_set_count(std::size_t const m, std::size_t const x) {
  auto total = std::uint64_t{0};
  auto binom = std::uint64_t{1};  // C(m, k)
  for (auto k = std::size_t{0}; k <= std::min(m, x); ++k) {
    if (k > 0) {
      // C(m, k) = C(m, k - 1) * (m - k + 1) / k; exact in 128 bits.
      auto const next = static_cast<unsigned __int128>(binom) * (m - k + 1) / k;
      if (next > std::numeric_limits<std::uint64_t>::max()) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      binom = static_cast<std::uint64_t>(next);
    }
    if (binom > std::numeric_limits<std::uint64_t>::max() - total) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total += binom;
  }
  return total;
}

namespace {

void require_delay_budget(std::size_t const m, std::size_t const x,
                          budget const& b) {
  auto const count = delay_set_count(m, x);
  if (count > b.max_delay_sets) {
    throw budget_exceeded{fmt::format(
        "instance too large for oracle: {} delay sets over {} arcs", count, m)};
  }
}

}  // namespace

arrival_vector brute_force_worst_case(temporal_graph const& g,
                                      std::span<vertex_id const> r,
                                      std::size_t const x, duration const delta,
                                      delay_kind const kind, budget const& b) {
  require_valid_route(g, r);
  auto const relevant = relevant_arcs(g, r);
  require_delay_budget(relevant.size(), x, b);

  auto worst = arrival_vector(x + 1, ext_time{0});
  for_each_subset(relevant, x, [&](std::span<arc_id const> subset) {
    auto const d = delay_set{{begin(subset), end(subset)}, kind, delta};
    auto const arrival = earliest_delayed_arrival(g, r, d);
    worst[subset.size()] = std::max(worst[subset.size()], arrival);
    return true;
  });
  // Sets larger than the number of relevant arcs do not exist; "up to y"
  // delays means the running maximum.
  for (auto y = std::size_t{1}; y <= x; ++y) {
    worst[y] = std::max(worst[y], worst[y - 1]);
  }
  return worst;
}

bool brute_force_robust(temporal_graph const& g, std::span<vertex_id const> r,
                        std::size_t const x, duration const delta,
                        delay_kind const kind, budget const& b) {
  return !find_breaking_set(g, r, x, delta, kind, b).has_value();
}

std::optional<delay_set> find_breaking_set(temporal_graph const& g,
                                           std::span<vertex_id const> r,
                                           std::size_t const x,
                                           duration const delta,
                                           delay_kind const kind,
                                           budget const& b) {
  require_valid_route(g, r);
  auto const relevant = relevant_arcs(g, r);
  require_delay_budget(relevant.size(), x, b);

  auto found = std::optional<delay_set>{};
  for_each_subset(relevant, x, [&](std::span<arc_id const> subset) {
    auto d = delay_set{{begin(subset), end(subset)}, kind, delta};
    if (earliest_delayed_arrival(g, r, d).is_inf()) {
      found = std::move(d);
      return false;
    }
    return true;
  });
  return found;
}

delay_set shrink_breaking_set(temporal_graph const& g,
                              std::span<vertex_id const> r, delay_set d) {
  if (earliest_delayed_arrival(g, r, d).is_finite()) {
    throw contract_error{"shrink_breaking_set: set does not break the route"};
  }
  for (auto i = d.arcs.size(); i-- > 0;) {
    auto candidate = d;
    candidate.arcs.erase(begin(candidate.arcs) + static_cast<std::ptrdiff_t>(i));
    if (earliest_delayed_arrival(g, r, candidate).is_inf()) {
      d = std::move(candidate);
    }
  }
  return d;
}

std::vector<route> simple_paths(static_graph const& sg, vertex_id const s,
                                vertex_id const z, budget const& b) {
  auto paths = std::vector<route>{};
  auto on_path = std::vector<bool>(sg.vertex_count(), false);
  auto path = route{s};
  on_path[s] = true;
  auto rec = [&](auto&& self, vertex_id const v) -> void {
    if (v == z) {
      if (paths.size() == b.max_paths) {
        throw budget_exceeded{fmt::format(
            "instance too large for oracle: more than {} simple paths",
            b.max_paths)};
      }
      paths.push_back(path);
      return;
    }
    for (auto const w : sg.neighbors(v)) {
      if (on_path[w]) {
        continue;
      }
      on_path[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  rec(rec, s);
  return paths;
}

std::optional<route> brute_force_solve(drp_instance const& inst,
                                       budget const& b) {
  auto const& g = inst.graph;
  if (inst.s >= g.vertex_count() || inst.z >= g.vertex_count()) {
    throw contract_error{"source or target out of range"};
  }
  for (auto const& r : simple_paths(underlying_graph(g), inst.s, inst.z, b)) {
    if (brute_force_robust(g, r, inst.x, inst.delta, delay_kind::traversal, b)) {
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace drp::oracle
