#include "drp/temporal_graph.h"

#include <algorithm>
#include <limits>
#include <tuple>
#include <numeric>

#include "fmt/core.h"

namespace drp {

temporal_graph::temporal_graph(std::size_t const vertex_count,
                               std::vector<time_arc> arcs)
    : vertex_count_{vertex_count}, arcs_{std::move(arcs)} {
  if (vertex_count_ == 0) {
    throw validation_error{"vertex count must be positive", 0};
  }
  if (arcs_.size() >= std::numeric_limits<arc_id>::max()) {
    throw validation_error{"too many arcs", arcs_.size()};
  }
  for (auto i = std::size_t{0}; i != arcs_.size(); ++i) {
    auto const& a = arcs_[i];
    if (a.src >= vertex_count_ || a.dst >= vertex_count_) {
      throw validation_error{
          fmt::format("arc {}: endpoint out of range ({} -> {}, {} vertices)",
                      i, a.src, a.dst, vertex_count_),
          i};
    }
    if (a.t < 0 || a.lambda < 0) {
      throw validation_error{
          fmt::format("arc {}: negative time label or traversal time", i), i};
    }
    if (a.t > kMaxFiniteTime || a.lambda > kMaxFiniteTime - a.t) {
      throw validation_error{fmt::format("arc {}: time out of range", i), i};
    }
    max_time_ = std::max(max_time_, a.t);
  }

  pair_order_.resize(arcs_.size());
  std::iota(begin(pair_order_), end(pair_order_), arc_id{0});
  std::sort(begin(pair_order_), end(pair_order_), [&](arc_id x, arc_id y) {
    auto const& a = arcs_[x];
    auto const& b = arcs_[y];
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst) ||
           (std::tie(a.src, a.dst) == std::tie(b.src, b.dst) &&
            std::make_tuple(a.arrival(), a.t, x) <
                std::make_tuple(b.arrival(), b.t, y));
  });

  succ_offsets_.assign(vertex_count_ + 1, 0);
  for (auto i = std::size_t{0}; i != pair_order_.size();) {
    auto const& a = arcs_[pair_order_[i]];
    auto j = i;
    while (j != pair_order_.size() && arcs_[pair_order_[j]].src == a.src &&
           arcs_[pair_order_[j]].dst == a.dst) {
      ++j;
    }
    successors_.push_back(a.dst);
    pair_ranges_.push_back({static_cast<std::uint32_t>(i),
                            static_cast<std::uint32_t>(j)});
    ++succ_offsets_[a.src + 1];
    i = j;
  }
  std::partial_sum(begin(succ_offsets_), end(succ_offsets_),
                   begin(succ_offsets_));

  std::vector<std::vector<std::int64_t>> deps(vertex_count_);
  for (auto const& a : arcs_) {
    deps[a.src].push_back(a.t);
  }
  dep_offsets_.reserve(vertex_count_ + 1);
  dep_offsets_.push_back(0);
  for (auto& d : deps) {
    std::sort(begin(d), end(d));
    d.erase(std::unique(begin(d), end(d)), end(d));
    departures_.insert(end(departures_), begin(d), end(d));
    dep_offsets_.push_back(static_cast<std::uint32_t>(departures_.size()));
  }
}

std::span<arc_id const> temporal_graph::pair_arcs(vertex_id const v,
                                                  vertex_id const w) const {
  if (v >= vertex_count_) {
    return {};
  }
  auto const first = begin(successors_) + succ_offsets_[v];
  auto const last = begin(successors_) + succ_offsets_[v + 1];
  auto const it = std::lower_bound(first, last, w);
  if (it == last || *it != w) {
    return {};
  }
  auto const& r = pair_ranges_[static_cast<std::size_t>(it - begin(successors_))];
  return std::span{pair_order_}.subspan(r.begin, r.end - r.begin);
}

std::span<std::int64_t const> temporal_graph::departures(vertex_id const v) const {
  return std::span{departures_}.subspan(dep_offsets_[v],
                                        dep_offsets_[v + 1] - dep_offsets_[v]);
}

std::span<vertex_id const> temporal_graph::successors(vertex_id const v) const {
  return std::span{successors_}.subspan(succ_offsets_[v],
                                        succ_offsets_[v + 1] - succ_offsets_[v]);
}

temporal_graph build_graph(std::size_t const vertex_count,
                           std::vector<time_arc> arcs) {
  return temporal_graph{vertex_count, std::move(arcs)};
}

static_graph::static_graph(std::size_t const vertex_count,
                           std::vector<std::pair<vertex_id, vertex_id>> edges)
    : vertex_count_{vertex_count} {
  for (auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw contract_error{"static_graph: edge endpoint out of range"};
    }
    if (u > v) {
      std::swap(u, v);
    }
  }
  std::erase_if(edges, [](auto const& e) { return e.first == e.second; });
  std::sort(begin(edges), end(edges));
  edges.erase(std::unique(begin(edges), end(edges)), end(edges));
  edges_ = std::move(edges);

  adj_offsets_.assign(vertex_count_ + 1, 0);
  for (auto const& [u, v] : edges_) {
    ++adj_offsets_[u + 1];
    ++adj_offsets_[v + 1];
  }
  std::partial_sum(begin(adj_offsets_), end(adj_offsets_), begin(adj_offsets_));
  adj_.resize(adj_offsets_.back());
  auto fill = std::vector<std::uint32_t>(begin(adj_offsets_), end(adj_offsets_) - 1);
  for (auto const& [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (auto v = std::size_t{0}; v != vertex_count_; ++v) {
    std::sort(begin(adj_) + adj_offsets_[v], begin(adj_) + adj_offsets_[v + 1]);
  }
}

std::span<vertex_id const> static_graph::neighbors(vertex_id const v) const {
  return std::span{adj_}.subspan(adj_offsets_[v],
                                 adj_offsets_[v + 1] - adj_offsets_[v]);
}

bool static_graph::has_edge(vertex_id const u, vertex_id const v) const {
  auto const n = neighbors(u);
  return std::binary_search(begin(n), end(n), v);
}

static_graph underlying_graph(temporal_graph const& g) {
  auto edges = std::vector<std::pair<vertex_id, vertex_id>>{};
  edges.reserve(g.arc_count());
  for (auto const& a : g.arcs()) {
    edges.emplace_back(a.src, a.dst);
  }
  return static_graph{g.vertex_count(), std::move(edges)};
}

bool is_duplicate_free(std::span<vertex_id const> r) {
  auto sorted = std::vector<vertex_id>(begin(r), end(r));
  std::sort(begin(sorted), end(sorted));
  return std::adjacent_find(begin(sorted), end(sorted)) == end(sorted);
}

void require_valid_route(temporal_graph const& g, std::span<vertex_id const> r) {
  if (r.empty()) {
    throw contract_error{"route must contain at least one vertex"};
  }
  for (auto const v : r) {
    if (v >= g.vertex_count()) {
      throw contract_error{fmt::format("route vertex {} out of range", v)};
    }
  }
  if (!is_duplicate_free(r)) {
    throw contract_error{"route contains a repeated vertex"};
  }
}

delay_set::delay_set(std::vector<arc_id> delayed, delay_kind const k,
                     duration const d)
    : arcs{std::move(delayed)}, kind{k}, delta{d} {
  if (delta < 0) {
    throw contract_error{"delay must be non-negative"};
  }
  std::sort(begin(arcs), end(arcs));
  arcs.erase(std::unique(begin(arcs), end(arcs)), end(arcs));
}

bool delay_set::contains(arc_id const a) const {
  return std::binary_search(begin(arcs), end(arcs), a);
}

bool is_delayed_walk(temporal_graph const& g, std::span<arc_id const> walk,
                     delay_set const& d) {
  for (auto i = std::size_t{1}; i < walk.size(); ++i) {
    if (g.arc(walk[i - 1]).dst != g.arc(walk[i]).src) {
      throw contract_error{
          fmt::format("walk is not contiguous at position {}", i)};
    }
  }
  for (auto i = std::size_t{1}; i < walk.size(); ++i) {
    auto const& prev = g.arc(walk[i - 1]);
    auto const& next = g.arc(walk[i]);
    auto const prev_delay = d.delay_of(walk[i - 1]);
    auto const next_delay = d.delay_of(walk[i]);
    auto const ok = d.kind == delay_kind::traversal
                        ? prev.arrival() + prev_delay <= next.t
                        : prev.arrival() + prev_delay <= next.t + next_delay;
    if (!ok) {
      return false;
    }
  }
  return true;
}

}  // namespace drp
