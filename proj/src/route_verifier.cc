#include "drp/route_verifier.h"

#include <algorithm>

namespace drp {

std::optional<worst_case_table::breakpoint> worst_case_table::first_break() const {
  for (auto j = std::size_t{0}; j != rows.size(); ++j) {
    auto const& row = rows[j];
    auto const it = std::find_if(begin(row), end(row),
                                 [](ext_time t) { return t.is_inf(); });
    if (it != end(row)) {
      return breakpoint{j, static_cast<std::size_t>(it - begin(row))};
    }
  }
  return std::nullopt;
}

std::vector<arc_id> available_arcs(temporal_graph const& g, vertex_id const v,
                                   vertex_id const w, ext_time const t) {
  if (t.is_inf()) {
    throw contract_error{"available_arcs: start time must be finite"};
  }
  auto out = std::vector<arc_id>{};
  for (auto const a : g.pair_arcs(v, w)) {
    if (g.arc(a).t >= t.value()) {
      out.push_back(a);
    }
  }
  return out;
}

ext_time worst_case_step(temporal_graph const& g, std::span<arc_id const> pair,
                         ext_time const t, std::size_t const y,
                         duration const delta) {
  if (t.is_inf()) {
    return t;
  }
  auto const start = t.value();
  auto seen = std::size_t{0};
  auto first = ext_time::inf();
  for (auto const a : pair) {
    auto const& arc = g.arc(a);
    if (arc.t < start) {
      continue;
    }
    if (seen == 0) {
      first = ext_time{arc.arrival()};
    }
    if (seen == y) {
      return std::min(first + delta, ext_time{arc.arrival()});
    }
    ++seen;
  }
  // Fewer than y + 1 arcs: every available arc can be delayed.
  return first + delta;
}

ext_time worst_case_step(temporal_graph const& g, vertex_id const v,
                         vertex_id const w, ext_time const t,
                         std::size_t const y, duration const delta) {
  return worst_case_step(g, g.pair_arcs(v, w), t, y, delta);
}

arrival_vector next_row(temporal_graph const& g, vertex_id const v,
                        vertex_id const w, arrival_vector const& prev,
                        duration const delta) {
  auto const pair = g.pair_arcs(v, w);
  auto next = arrival_vector(prev.size(), ext_time::inf());
  if (pair.empty()) {
    return next;
  }
  for (auto y = std::size_t{0}; y != prev.size(); ++y) {
    auto worst = ext_time{0};
    for (auto yp = std::size_t{0}; yp <= y && worst.is_finite(); ++yp) {
      worst = std::max(worst, worst_case_step(g, pair, prev[yp], y - yp, delta));
    }
    next[y] = worst;
  }
  return next;
}

worst_case_table compute_worst_case_table(temporal_graph const& g,
                                          std::span<vertex_id const> r,
                                          arrival_vector start_row,
                                          duration const delta) {
  require_valid_route(g, r);
  if (start_row.empty()) {
    throw contract_error{"start row must have x + 1 entries"};
  }
  if (delta < 0) {
    throw contract_error{"delay must be non-negative"};
  }
  auto table = worst_case_table{};
  table.x = start_row.size() - 1;
  table.delta = delta;
  table.rows.reserve(r.size());
  table.rows.push_back(std::move(start_row));
  for (auto i = std::size_t{1}; i < r.size(); ++i) {
    table.rows.push_back(next_row(g, r[i - 1], r[i], table.rows.back(), delta));
  }
  return table;
}

worst_case_table compute_worst_case_table(temporal_graph const& g,
                                          std::span<vertex_id const> r,
                                          std::size_t const x,
                                          duration const delta,
                                          ext_time const start) {
  return compute_worst_case_table(g, r, arrival_vector(x + 1, start), delta);
}

bool is_delay_robust(temporal_graph const& g, std::span<vertex_id const> r,
                     std::size_t const x, duration const delta) {
  return compute_worst_case_table(g, r, x, delta).robust();
}

}  // namespace drp
