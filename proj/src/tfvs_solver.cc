#include "drp/tfvs_solver.h"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "fmt/core.h"

namespace drp::tfvs {

namespace {

bool removed_by(time_arc const& a, timed_fvs const& X) {
  return std::binary_search(begin(X), end(X), appearance{a.src, a.t}) ||
         std::binary_search(begin(X), end(X), appearance{a.dst, a.t});
}

timed_fvs normalized(timed_fvs X) {
  std::sort(begin(X), end(X));
  X.erase(std::unique(begin(X), end(X)), end(X));
  return X;
}

// Some cycle of a static graph as a closed vertex sequence (first vertex not
// repeated at the end); empty if the graph is a forest.
std::vector<vertex_id> find_cycle(static_graph const& g) {
  auto const n = g.vertex_count();
  auto parent = std::vector<vertex_id>(n);
  auto depth = std::vector<std::size_t>(n);
  auto seen = std::vector<bool>(n, false);
  for (auto root = vertex_id{0}; root != n; ++root) {
    if (seen[root]) {
      continue;
    }
    seen[root] = true;
    parent[root] = root;
    depth[root] = 0;
    auto bfs = std::deque<vertex_id>{root};
    while (!bfs.empty()) {
      auto const v = bfs.front();
      bfs.pop_front();
      for (auto const w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          bfs.push_back(w);
        } else if (w != parent[v] && parent[w] != v) {
          // Non-tree edge {v, w}: close the cycle through the tree.
          auto left = std::vector<vertex_id>{};
          auto right = std::vector<vertex_id>{};
          auto a = v;
          auto b = w;
          while (depth[a] > depth[b]) {
            left.push_back(a);
            a = parent[a];
          }
          while (depth[b] > depth[a]) {
            right.push_back(b);
            b = parent[b];
          }
          while (a != b) {
            left.push_back(a);
            right.push_back(b);
            a = parent[a];
            b = parent[b];
          }
          left.push_back(a);
          left.insert(end(left), right.rbegin(), right.rend());
          return left;
        }
      }
    }
  }
  return {};
}

// Rooted spanning structure of a forest with unique-path lookup.
class forest_paths {
public:
  explicit forest_paths(static_graph const& f)
      : graph_{f},
        parent_(f.vertex_count()),
        depth_(f.vertex_count(), 0),
        root_(f.vertex_count()) {
    auto const n = f.vertex_count();
    auto seen = std::vector<bool>(n, false);
    auto tree_edges = std::size_t{0};
    for (auto r = vertex_id{0}; r != n; ++r) {
      if (seen[r]) {
        continue;
      }
      seen[r] = true;
      parent_[r] = r;
      root_[r] = r;
      auto bfs = std::deque<vertex_id>{r};
      while (!bfs.empty()) {
        auto const v = bfs.front();
        bfs.pop_front();
        for (auto const w : f.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = true;
            parent_[w] = v;
            depth_[w] = depth_[v] + 1;
            root_[w] = r;
            ++tree_edges;
            bfs.push_back(w);
          }
        }
      }
    }
    // Unique forest routes need an acyclic graph.
    if (tree_edges != f.edge_count()) {
      throw contract_error{"underlying graph of G - X contains a cycle"};
    }
  }

  bool adjacent(vertex_id u, vertex_id v) const { return graph_.has_edge(u, v); }

  std::optional<route> path(vertex_id u, vertex_id v) const {
    if (root_[u] != root_[v]) {
      return std::nullopt;
    }
    auto left = route{};
    auto right = route{};
    while (depth_[u] > depth_[v]) {
      left.push_back(u);
      u = parent_[u];
    }
    while (depth_[v] > depth_[u]) {
      right.push_back(v);
      v = parent_[v];
    }
    while (u != v) {
      left.push_back(u);
      right.push_back(v);
      u = parent_[u];
      v = parent_[v];
    }
    left.push_back(u);
    left.insert(end(left), right.rbegin(), right.rend());
    return left;
  }

private:
  static_graph graph_;
  std::vector<vertex_id> parent_;
  std::vector<std::size_t> depth_;
  std::vector<vertex_id> root_;
};

}  // namespace

temporal_graph remove_appearances(temporal_graph const& g, timed_fvs const& X) {
  auto const sorted = normalized(X);
  auto arcs = std::vector<time_arc>{};
  for (auto const& a : g.arcs()) {
    if (!removed_by(a, sorted)) {
      arcs.push_back(a);
    }
  }
  return temporal_graph{g.vertex_count(), std::move(arcs)};
}

bool is_timed_fvs(temporal_graph const& g, timed_fvs const& X) {
  return find_cycle(underlying_graph(remove_appearances(g, X))).empty();
}

std::optional<timed_fvs> minimum_tfvs(temporal_graph const& g,
                                      std::size_t const max_size,
                                      search_budget const& b) {
  auto nodes = std::uint64_t{0};
  auto chosen = timed_fvs{};

  auto rec = [&](auto&& self, std::size_t const remaining) -> bool {
    if (++nodes > b.max_nodes) {
      throw budget_exceeded{fmt::format(
          "timed feedback vertex set search exceeded {} nodes; supply X "
          "explicitly",
          b.max_nodes)};
    }
    auto const reduced = remove_appearances(g, chosen);
    auto const cycle = find_cycle(underlying_graph(reduced));
    if (cycle.empty()) {
      return true;
    }
    if (remaining == 0) {
      return false;
    }
    // Some arc on every cycle edge must go, so some appearance at an endpoint
    // of a cycle edge, timed like one of its remaining arcs, is in any
    // solution.
    auto options = std::set<appearance>{};
    for (auto i = std::size_t{0}; i != cycle.size(); ++i) {
      auto const u = cycle[i];
      auto const v = cycle[(i + 1) % cycle.size()];
      for (auto const& [a, c] : {std::pair{u, v}, std::pair{v, u}}) {
        for (auto const id : reduced.pair_arcs(a, c)) {
          auto const t = reduced.arc(id).t;
          options.insert({u, t});
          options.insert({v, t});
        }
      }
    }
    for (auto const& o : options) {
      chosen.push_back(o);
      if (self(self, remaining - 1)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };

  for (auto k = std::size_t{0}; k <= max_size; ++k) {
    chosen.clear();
    if (rec(rec, k)) {
      return normalized(chosen);
    }
  }
  return std::nullopt;
}

timed_fvs compute_tfvs(temporal_graph const& g, search_budget const& b) {
  // Removing every arc's source appearance always works, so the search ends.
  auto const found = minimum_tfvs(g, g.arc_count(), b);
  if (!found.has_value() || !is_timed_fvs(g, *found)) {
    throw std::logic_error{"compute_tfvs: search returned no forest"};
  }
  return *found;
}

std::vector<ext_time> relevant_times(temporal_graph const& g,
                                     timed_fvs const& X, duration const delta) {
  auto const sorted = normalized(X);
  auto out = std::vector<ext_time>{ext_time::inf()};
  for (auto const& a : sorted) {
    out.push_back(ext_time{a.t});
    out.push_back(ext_time{a.t} + delta);
  }
  for (auto const& a : g.arcs()) {
    if (removed_by(a, sorted)) {
      out.push_back(ext_time{a.arrival()});
      out.push_back(ext_time{a.arrival()} + delta);
    }
  }
  std::sort(begin(out), end(out));
  out.erase(std::unique(begin(out), end(out)), end(out));
  return out;
}

ext_time round_to(std::span<ext_time const> times, ext_time const t) {
  auto const it = std::lower_bound(begin(times), end(times), t);
  return it == end(times) ? ext_time::inf() : *it;
}

arrival_vector propagate(temporal_graph const& g, std::span<vertex_id const> r,
                         arrival_vector const& from, duration const delta) {
  return compute_worst_case_table(g, r, from, delta).final_row();
}

bool check_route(temporal_graph const& g, std::span<vertex_id const> r,
                 arrival_vector const& prof_s, arrival_vector const& prof_z,
                 duration const delta, std::span<ext_time const> times) {
  if (prof_s.size() != prof_z.size() || prof_s.empty()) {
    return false;
  }
  auto const x = prof_s.size() - 1;
  // worst[i][k]: worst-case arrival after starting at prof_s[i] with k delays.
  auto worst = std::vector<arrival_vector>{};
  worst.reserve(x + 1);
  for (auto i = std::size_t{0}; i <= x; ++i) {
    if (prof_s[i].is_inf()) {
      worst.emplace_back(x + 1, ext_time::inf());
    } else {
      worst.push_back(
          compute_worst_case_table(g, r, x, delta, prof_s[i]).final_row());
    }
  }
  for (auto j = std::size_t{0}; j <= x; ++j) {
    auto bound = ext_time{0};
    for (auto i = std::size_t{0}; i <= j; ++i) {
      bound = std::max(bound, worst[i][j - i]);
    }
    if (prof_z[j] != round_to(times, bound)) {
      return false;
    }
  }
  return true;
}

namespace {

struct split_point {
  vertex_id v;
  bool pred_feedback;
  bool succ_feedback;
};

class search {
public:
  search(drp_instance const& inst, timed_fvs X)
      : inst_{inst},
        X_{normalized(std::move(X))},
        forest_{underlying_graph(remove_appearances(inst.graph, X_))},
        times_{relevant_times(inst.graph, X_, inst.delta)},
        used_(inst.graph.vertex_count(), false) {
    for (auto const& a : X_) {
      if (a.vertex >= inst.graph.vertex_count()) {
        throw contract_error{"appearance vertex out of range"};
      }
      if (a.vertex != inst.s && a.vertex != inst.z &&
          (candidates_.empty() || candidates_.back() != a.vertex)) {
        candidates_.push_back(a.vertex);
      }
    }
  }

  std::optional<route> run() {
    auto const& g = inst_.graph;
    if (inst_.s == inst_.z) {
      return route{inst_.s};
    }
    current_ = route{inst_.s};
    used_[inst_.s] = true;
    auto const start = arrival_vector(inst_.x + 1, ext_time{0});
    for (auto const succ_fb : {false, true}) {
      if (extend({inst_.s, false, succ_fb}, start)) {
        if (!is_delay_robust(g, current_, inst_.x, inst_.delta)) {
          throw std::logic_error{"tfvs: assembled route is not robust"};
        }
        return current_;
      }
    }
    return std::nullopt;
  }

  std::size_t segments_checked() const { return segments_checked_; }

private:
  // Heads of arcs leaving a that are not forest neighbors of a.
  std::vector<vertex_id> feedback_out(vertex_id a) const {
    auto out = std::vector<vertex_id>{};
    for (auto const u : inst_.graph.successors(a)) {
      if (u != a && !forest_.adjacent(a, u)) {
        out.push_back(u);
      }
    }
    return out;
  }

  std::vector<vertex_id> feedback_in(vertex_id b) const {
    auto out = std::vector<vertex_id>{};
    auto const& g = inst_.graph;
    for (auto u = vertex_id{0}; u != g.vertex_count(); ++u) {
      if (u != b && !forest_.adjacent(u, b) && !g.pair_arcs(u, b).empty()) {
        out.push_back(u);
      }
    }
    return out;
  }

  // Candidate segments from a to b (both included) for the given hop kinds.
  std::vector<route> segments(split_point const& a, split_point const& b) const {
    auto out = std::vector<route>{};
    auto const join = [&](std::optional<route> head, vertex_id first,
                          vertex_id last, bool prepend, bool append) {
      if (!head.has_value()) {
        return;
      }
      auto r = route{};
      if (prepend) {
        r.push_back(first);
      }
      r.insert(end(r), begin(*head), end(*head));
      if (append) {
        r.push_back(last);
      }
      out.push_back(std::move(r));
    };
    if (a.succ_feedback && b.pred_feedback) {
      for (auto const u : feedback_out(a.v)) {
        if (u == b.v) {
          out.push_back(route{a.v, b.v});
          continue;
        }
        for (auto const w : feedback_in(b.v)) {
          if (w != a.v) {
            join(forest_.path(u, w), a.v, b.v, true, true);
          }
        }
      }
    } else if (a.succ_feedback) {
      for (auto const u : feedback_out(a.v)) {
        if (u != b.v) {
          join(forest_.path(u, b.v), a.v, b.v, true, false);
        }
      }
    } else if (b.pred_feedback) {
      for (auto const w : feedback_in(b.v)) {
        if (w != a.v) {
          join(forest_.path(a.v, w), a.v, b.v, false, true);
        }
      }
    } else {
      join(forest_.path(a.v, b.v), a.v, b.v, false, false);
    }
    return out;
  }

  // Tries segments from split point a (whose profile is prof) onward.
  bool extend(split_point const& a, arrival_vector const& prof) {
    auto const& g = inst_.graph;
    auto const z = inst_.z;

    // Final segment into z.
    for (auto const pred_fb : {false, true}) {
      for (auto const& seg : segments(a, {z, pred_fb, false})) {
        ++segments_checked_;
        if (!fresh(seg)) {
          continue;
        }
        if (propagate(g, seg, prof, inst_.delta)[inst_.x].is_finite()) {
          append(seg);
          return true;
        }
      }
    }

    // Intermediate split points in X-hat.
    for (auto const v : candidates_) {
      if (used_[v]) {
        continue;
      }
      for (auto const pred_fb : {false, true}) {
        for (auto const succ_fb : {false, true}) {
          if (!pred_fb && !succ_fb) {
            continue;
          }
          auto const b = split_point{v, pred_fb, succ_fb};
          for (auto const& seg : segments(a, b)) {
            ++segments_checked_;
            if (!fresh(seg)) {
              continue;
            }
            auto next = propagate(g, seg, prof, inst_.delta);
            for (auto& t : next) {
              t = round_to(times_, t);
            }
            if (next[inst_.x].is_inf()) {
              continue;
            }
            if (!check_route(g, seg, prof, next, inst_.delta, times_)) {
              throw std::logic_error{"tfvs: forced profile rejected"};
            }
            append(seg);
            if (extend(b, next)) {
              return true;
            }
            retract(seg);
          }
        }
      }
    }
    return false;
  }

  // Vertices after the segment's first one are unused and are not z unless
  // z ends the segment.
  bool fresh(route const& seg) const {
    for (auto i = std::size_t{1}; i != seg.size(); ++i) {
      if (used_[seg[i]]) {
        return false;
      }
      if (seg[i] == inst_.z && i + 1 != seg.size()) {
        return false;
      }
    }
    return is_duplicate_free(seg);
  }

  void append(route const& seg) {
    for (auto i = std::size_t{1}; i != seg.size(); ++i) {
      used_[seg[i]] = true;
      current_.push_back(seg[i]);
    }
  }

  void retract(route const& seg) {
    for (auto i = std::size_t{1}; i != seg.size(); ++i) {
      used_[seg[i]] = false;
      current_.pop_back();
    }
  }

  drp_instance const& inst_;
  timed_fvs X_;
  forest_paths forest_;
  std::vector<ext_time> times_;
  std::vector<vertex_id> candidates_;
  std::vector<bool> used_;
  route current_;
  std::size_t segments_checked_{0};
};

}  // namespace

result solve(drp_instance const& inst, std::optional<timed_fvs> X,
             search_budget const& b) {
  auto const& g = inst.graph;
  if (inst.s >= g.vertex_count() || inst.z >= g.vertex_count()) {
    throw contract_error{"source or target out of range"};
  }
  auto fvs = X.has_value() ? normalized(std::move(*X)) : compute_tfvs(g, b);
  if (!is_timed_fvs(g, fvs)) {
    throw contract_error{"supplied set is not a timed feedback vertex set"};
  }
  auto s = search{inst, fvs};
  auto res = result{};
  res.path = s.run();
  res.fvs = std::move(fvs);
  res.segments_checked = s.segments_checked();
  return res;
}

}  // namespace drp::tfvs
