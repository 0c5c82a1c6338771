#include "drp/pareto_solver.h"

#include <algorithm>
#include <limits>
#include <queue>

namespace drp::pareto {

bool dominates(arrival_vector const& a, arrival_vector const& b) {
  if (a.size() != b.size()) {
    throw contract_error{"dominates: arrival vectors differ in length"};
  }
  for (auto i = std::size_t{0}; i != a.size(); ++i) {
    if (b[i] < a[i]) {
      return false;
    }
  }
  return true;
}

ext_time round_up(temporal_graph const& g, vertex_id const w, ext_time const t) {
  if (t.is_inf()) {
    return t;
  }
  auto const deps = g.departures(w);
  auto const it = std::lower_bound(begin(deps), end(deps), t.value());
  return it == end(deps) ? ext_time::inf() : ext_time{*it};
}

std::optional<arrival_vector> extend(temporal_graph const& g, vertex_id const v,
                                     arrival_vector const& from,
                                     vertex_id const w, duration const delta,
                                     bool const round) {
  auto next = next_row(g, v, w, from, delta);
  if (round) {
    for (auto& t : next) {
      t = round_up(g, w, t);
    }
  }
  if (next.back().is_inf()) {
    return std::nullopt;
  }
  return next;
}

namespace {

constexpr auto kNoParent = std::numeric_limits<std::uint32_t>::max();

struct label {
  vertex_id at;
  arrival_vector vec;
  std::uint32_t parent;
  bool alive;
};

}  // namespace

std::optional<result> solve(drp_instance const& inst, options const& opt,
                            stats* st) {
  auto const& g = inst.graph;
  if (inst.s >= g.vertex_count() || inst.z >= g.vertex_count()) {
    throw contract_error{"source or target out of range"};
  }
  auto const zeros = arrival_vector(inst.x + 1, ext_time{0});
  if (inst.s == inst.z) {
    return result{{inst.s}, zeros};
  }

  auto labels = std::vector<label>{};
  auto front = std::vector<std::vector<std::uint32_t>>(g.vertex_count());
  auto local_stats = stats{};
  local_stats.max_front_size.assign(g.vertex_count(), 0);

  // Min-heap in lexicographic vector order; a linear extension of the
  // dominance order, so a label is never popped after one dominating it.
  auto const later = [&](std::uint32_t a, std::uint32_t b) {
    auto const& la = labels[a];
    auto const& lb = labels[b];
    if (la.vec != lb.vec) {
      return lb.vec < la.vec;
    }
    if (la.at != lb.at) {
      return lb.at < la.at;
    }
    return b < a;
  };
  auto queue = std::priority_queue<std::uint32_t, std::vector<std::uint32_t>,
                                   decltype(later)>{later};

  auto const add_label = [&](vertex_id const at, arrival_vector vec,
                             std::uint32_t const parent) {
    auto& f = front[at];
    if (opt.prune) {
      for (auto const id : f) {
        if (dominates(labels[id].vec, vec)) {
          return;
        }
      }
      std::erase_if(f, [&](std::uint32_t const id) {
        if (dominates(vec, labels[id].vec)) {
          labels[id].alive = false;
          return true;
        }
        return false;
      });
    }
    auto const id = static_cast<std::uint32_t>(labels.size());
    labels.push_back({at, std::move(vec), parent, true});
    f.push_back(id);
    queue.push(id);
    ++local_stats.labels_created;
    local_stats.max_front_size[at] =
        std::max(local_stats.max_front_size[at], f.size());
  };

  add_label(inst.s, zeros, kNoParent);

  auto on_path = std::vector<bool>(g.vertex_count(), false);
  auto found = std::optional<result>{};
  while (!queue.empty()) {
    auto const id = queue.top();
    queue.pop();
    if (!labels[id].alive) {
      continue;
    }
    auto const v = labels[id].at;

    auto chain = route{};
    for (auto l = id; l != kNoParent; l = labels[l].parent) {
      chain.push_back(labels[l].at);
    }
    std::reverse(begin(chain), end(chain));

    if (v == inst.z) {
      found = result{std::move(chain), labels[id].vec};
      break;
    }
    ++local_stats.labels_expanded;

    for (auto const u : chain) {
      on_path[u] = true;
    }
    for (auto const w : g.successors(v)) {
      if (on_path[w]) {
        continue;
      }
      // Copy: add_label may reallocate `labels`.
      auto const from = labels[id].vec;
      auto next = extend(g, v, from, w, inst.delta, w != inst.z);
      if (next.has_value()) {
        add_label(w, std::move(*next), id);
      }
    }
    for (auto const u : chain) {
      on_path[u] = false;
    }
  }

  if (st != nullptr) {
    *st = std::move(local_stats);
  }
  return found;
}

}  // namespace drp::pareto
