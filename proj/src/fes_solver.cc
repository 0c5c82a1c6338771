#include "drp/fes_solver.h"

#include <algorithm>
#include <deque>

#include "drp/route_verifier.h"

namespace drp::fes {

static_graph prune_degree_one(static_graph const& g, vertex_id const s,
                              vertex_id const z) {
  auto const n = g.vertex_count();
  auto degree = std::vector<std::size_t>(n);
  auto removed = std::vector<bool>(n, false);
  auto pending = std::deque<vertex_id>{};
  for (auto v = vertex_id{0}; v != n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1 && v != s && v != z) {
      pending.push_back(v);
      removed[v] = true;
    }
  }
  while (!pending.empty()) {
    auto const v = pending.front();
    pending.pop_front();
    for (auto const w : g.neighbors(v)) {
      if (removed[w]) {
        continue;
      }
      if (--degree[w] <= 1 && w != s && w != z) {
        removed[w] = true;
        pending.push_back(w);
      }
    }
  }
  auto edges = std::vector<edge>{};
  for (auto const& e : g.edges()) {
    if (!removed[e.first] && !removed[e.second]) {
      edges.push_back(e);
    }
  }
  return static_graph{n, std::move(edges)};
}

std::vector<edge> minimum_feedback_edge_set(static_graph const& g) {
  auto const n = g.vertex_count();
  auto seen = std::vector<bool>(n, false);
  auto tree = std::vector<edge>{};
  for (auto root = vertex_id{0}; root != n; ++root) {
    if (seen[root]) {
      continue;
    }
    seen[root] = true;
    auto bfs = std::deque<vertex_id>{root};
    while (!bfs.empty()) {
      auto const v = bfs.front();
      bfs.pop_front();
      for (auto const w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          tree.emplace_back(std::min(v, w), std::max(v, w));
          bfs.push_back(w);
        }
      }
    }
  }
  std::sort(begin(tree), end(tree));
  auto feedback = std::vector<edge>{};
  std::set_difference(begin(g.edges()), end(g.edges()), begin(tree), end(tree),
                      std::back_inserter(feedback));
  return feedback;
}

path_decomposition decompose(static_graph const& pruned, vertex_id const s,
                             vertex_id const z) {
  auto dec = path_decomposition{};
  dec.graph = pruned;
  dec.feedback_edges = minimum_feedback_edge_set(pruned);

  auto const n = pruned.vertex_count();
  auto is_branch = std::vector<bool>(n, false);
  is_branch[s] = true;
  is_branch[z] = true;
  for (auto const& [u, v] : dec.feedback_edges) {
    is_branch[u] = true;
    is_branch[v] = true;
  }
  for (auto v = vertex_id{0}; v != n; ++v) {
    if (pruned.degree(v) >= 3) {
      is_branch[v] = true;
    }
    if (is_branch[v]) {
      dec.branch_vertices.push_back(v);
    }
  }

  auto forest_edges = std::vector<edge>{};
  std::set_difference(begin(pruned.edges()), end(pruned.edges()),
                      begin(dec.feedback_edges), end(dec.feedback_edges),
                      std::back_inserter(forest_edges));
  auto const forest = static_graph{n, forest_edges};

  auto used = std::vector<edge>{};
  auto const is_used = [&](vertex_id a, vertex_id b) {
    auto const e = edge{std::min(a, b), std::max(a, b)};
    return std::binary_search(begin(used), end(used), e);
  };
  auto const mark = [&](vertex_id a, vertex_id b) {
    auto const e = edge{std::min(a, b), std::max(a, b)};
    used.insert(std::upper_bound(begin(used), end(used), e), e);
  };

  for (auto const b : dec.branch_vertices) {
    for (auto const first : forest.neighbors(b)) {
      if (is_used(b, first)) {
        continue;
      }
      auto path = std::vector<vertex_id>{b, first};
      mark(b, first);
      auto prev = b;
      auto cur = first;
      while (!is_branch[cur]) {
        // Non-branch vertices have exactly two forest neighbors.
        auto const nb = forest.neighbors(cur);
        auto const next = nb[0] == prev ? nb[1] : nb[0];
        mark(cur, next);
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      dec.maximal_paths.push_back(std::move(path));
    }
  }
  return dec;
}

void enumerate_candidate_routes(path_decomposition const& dec,
                                vertex_id const s, vertex_id const z,
                                std::function<bool(route const&)> const& visit) {
  if (s == z) {
    visit(route{s});
    return;
  }

  // Condensed multigraph over branch vertices: each connector is the vertex
  // sequence leaving a branch vertex (feedback edge or oriented path).
  auto const n = dec.graph.vertex_count();
  auto connectors = std::vector<std::vector<std::vector<vertex_id>>>(n);
  for (auto const& [u, v] : dec.feedback_edges) {
    connectors[u].push_back({u, v});
    connectors[v].push_back({v, u});
  }
  for (auto const& p : dec.maximal_paths) {
    connectors[p.front()].push_back(p);
    connectors[p.back()].emplace_back(p.rbegin(), p.rend());
  }
  for (auto& c : connectors) {
    std::sort(begin(c), end(c));
  }

  auto visited = std::vector<bool>(n, false);
  auto current = route{s};
  visited[s] = true;
  auto stop = false;
  auto rec = [&](auto&& self, vertex_id const at) -> void {
    if (at == z) {
      stop = !visit(current);
      return;
    }
    for (auto const& c : connectors[at]) {
      auto const fresh = std::none_of(begin(c) + 1, end(c),
                                      [&](vertex_id v) { return visited[v]; });
      if (!fresh) {
        continue;
      }
      for (auto it = begin(c) + 1; it != end(c); ++it) {
        visited[*it] = true;
        current.push_back(*it);
      }
      self(self, c.back());
      for (auto it = begin(c) + 1; it != end(c); ++it) {
        visited[*it] = false;
        current.pop_back();
      }
      if (stop) {
        return;
      }
    }
  };
  rec(rec, s);
}

namespace {

temporal_graph restrict_to(temporal_graph const& g, static_graph const& pruned,
                           vertex_id const s, vertex_id const z) {
  auto arcs = std::vector<time_arc>{};
  auto const alive = [&](vertex_id v) {
    return v == s || v == z || pruned.degree(v) > 0;
  };
  for (auto const& a : g.arcs()) {
    if (alive(a.src) && alive(a.dst)) {
      arcs.push_back(a);
    }
  }
  return temporal_graph{g.vertex_count(), std::move(arcs)};
}

}  // namespace

std::size_t feedback_edge_number(drp_instance const& inst) {
  auto const pruned =
      prune_degree_one(underlying_graph(inst.graph), inst.s, inst.z);
  return minimum_feedback_edge_set(pruned).size();
}

result solve(drp_instance const& inst) {
  auto const& g = inst.graph;
  if (inst.s >= g.vertex_count() || inst.z >= g.vertex_count()) {
    throw contract_error{"source or target out of range"};
  }
  auto const pruned = prune_degree_one(underlying_graph(g), inst.s, inst.z);
  auto const dec = decompose(pruned, inst.s, inst.z);
  auto const reduced = restrict_to(g, pruned, inst.s, inst.z);

  auto res = result{};
  res.feedback_edge_number = dec.feedback_edges.size();
  enumerate_candidate_routes(dec, inst.s, inst.z, [&](route const& r) {
    ++res.candidates_checked;
    if (is_delay_robust(reduced, r, inst.x, inst.delta)) {
      res.path = r;
      return false;
    }
    return true;
  });
  return res;
}

}  // namespace drp::fes
