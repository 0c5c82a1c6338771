#pragma once

// Hand-rolled random instance generators shared by the unit tests and the
// acceptance runner.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "drp/instance.h"
#include "drp/reductions.h"
#include "drp/temporal_graph.h"

namespace drp::testing {

using rng_t = std::mt19937_64;

inline std::int64_t uniform(rng_t& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>{lo, hi}(rng);
}

inline bool coin(rng_t& rng, double p = 0.5) {
  return std::bernoulli_distribution{p}(rng);
}

// Five-vertex example network: s a b c z = 0 1 2 3 4.
inline temporal_graph example_graph() {
  return build_graph(5, {{0, 1, 3, 1},
                         {1, 2, 4, 1},
                         {1, 2, 8, 1},
                         {2, 3, 5, 1},
                         {2, 3, 9, 1},
                         {3, 4, 11, 1}});
}

inline route example_route() { return {0, 1, 2, 3, 4}; }

struct route_case {
  temporal_graph graph;
  route r;
  std::size_t x{0};
  duration delta{0};
};

// Route over up to six vertices with at most `max_relevant` arcs between
// consecutive route vertices, labels <= 10, x <= 3, delta <= 3. Times drift
// upwards along the route so that robust and fragile routes both occur.
inline route_case random_route_case(rng_t& rng, std::size_t max_relevant = 12) {
  while (true) {
    auto const hops = static_cast<std::size_t>(uniform(rng, 1, 5));
    auto const n = hops + 1 + static_cast<std::size_t>(uniform(rng, 0, 2));
    auto perm = std::vector<vertex_id>(n);
    for (auto i = vertex_id{0}; i != n; ++i) {
      perm[i] = i;
    }
    std::shuffle(begin(perm), end(perm), rng);
    auto r = route(begin(perm), begin(perm) + static_cast<std::ptrdiff_t>(hops + 1));

    auto arcs = std::vector<time_arc>{};
    auto relevant = std::size_t{0};
    for (auto h = std::size_t{0}; h != hops; ++h) {
      auto const count = static_cast<std::size_t>(uniform(rng, 0, 3));
      auto const base = static_cast<std::int64_t>(h * 10 / (hops + 1));
      for (auto k = std::size_t{0}; k != count; ++k) {
        arcs.push_back({r[h], r[h + 1],
                        std::min<std::int64_t>(10, base + uniform(rng, 0, 4)),
                        uniform(rng, 0, 2)});
      }
      relevant += count;
    }
    // A few arcs that do not connect consecutive route vertices.
    for (auto k = uniform(rng, 0, 3); k > 0; --k) {
      auto const u = static_cast<vertex_id>(uniform(rng, 0, n - 1));
      auto const v = static_cast<vertex_id>(uniform(rng, 0, n - 1));
      auto const pos_u = std::find(begin(r), end(r), u) - begin(r);
      auto const pos_v = std::find(begin(r), end(r), v) - begin(r);
      if (u == v || (pos_u + 1 == pos_v && pos_v <= static_cast<std::ptrdiff_t>(hops))) {
        continue;
      }
      arcs.push_back({u, v, uniform(rng, 0, 10), uniform(rng, 0, 2)});
    }
    if (relevant > max_relevant) {
      continue;
    }
    std::shuffle(begin(arcs), end(arcs), rng);
    return {build_graph(n, std::move(arcs)), std::move(r),
            static_cast<std::size_t>(uniform(rng, 0, 3)), uniform(rng, 0, 3)};
  }
}

// DRP instance with 2..max_n vertices, up to max_arcs arcs, s = 0,
// z = n - 1, x <= 2, delta <= 3.
inline drp_instance random_drp(rng_t& rng, std::size_t max_n = 7,
                               std::size_t max_arcs = 14) {
  auto const n = static_cast<std::size_t>(uniform(rng, 2, static_cast<std::int64_t>(max_n)));
  auto const m = static_cast<std::size_t>(
      uniform(rng, static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(max_arcs)));
  auto arcs = std::vector<time_arc>{};
  while (arcs.size() != m) {
    auto const u = static_cast<vertex_id>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto const v = static_cast<vertex_id>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    if (u == v) {
      continue;
    }
    // Mild bias towards forward arcs in id order, which keeps yes-instances
    // from being rare.
    auto const lo = coin(rng, 0.7) ? std::min(u, v) : std::max(u, v);
    auto const hi = lo == u ? v : u;
    arcs.push_back({lo, hi, uniform(rng, 0, 8), uniform(rng, 0, 2)});
  }
  auto inst = drp_instance{};
  inst.graph = build_graph(n, std::move(arcs));
  inst.s = 0;
  inst.z = static_cast<vertex_id>(n - 1);
  inst.x = static_cast<std::size_t>(uniform(rng, 0, 2));
  inst.delta = uniform(rng, 0, 3);
  return inst;
}

inline reductions::formula random_formula(rng_t& rng,
                                          std::vector<std::size_t> const& sizes,
                                          std::size_t& budget, int depth) {
  using reductions::formula;
  auto const leaf = [&] {
    --budget;
    auto const i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(sizes.size()) - 1));
    auto const a = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(sizes[i]) - 1));
    return formula::literal(i, a);
  };
  if (budget <= 1 || depth == 0 || coin(rng, 0.25)) {
    return leaf();
  }
  auto children = std::vector<formula>{};
  auto const k = uniform(rng, 2, 3);
  for (auto c = 0; c != k && budget > 0; ++c) {
    children.push_back(random_formula(rng, sizes, budget, depth - 1));
  }
  // Conjunctions are favoured; disjunction-heavy formulas are nearly always
  // satisfiable.
  return coin(rng, 0.7) ? formula::all_of(std::move(children))
                        : formula::any_of(std::move(children));
}

// n <= 3 classes of size <= 3, at most 5 literals.
inline reductions::mcpsat_instance random_mcpsat(rng_t& rng) {
  auto inst = reductions::mcpsat_instance{};
  auto const n = uniform(rng, 1, 3);
  for (auto i = 0; i != n; ++i) {
    inst.class_sizes.push_back(static_cast<std::size_t>(uniform(rng, 1, 3)));
  }
  auto budget = static_cast<std::size_t>(uniform(rng, 2, 5));
  inst.phi = random_formula(rng, inst.class_sizes, budget, 3);
  return inst;
}

// n <= max_vars variables; clauses of one to three distinct variables.
inline reductions::cnf_instance random_cnf(rng_t& rng, std::size_t max_vars = 4) {
  auto cnf = reductions::cnf_instance{};
  cnf.variable_count = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_vars)));
  auto const clauses = uniform(rng, 1, 7);
  for (auto c = 0; c != clauses; ++c) {
    auto vars = std::vector<std::int64_t>{};
    for (auto v = std::int64_t{1}; v <= static_cast<std::int64_t>(cnf.variable_count); ++v) {
      vars.push_back(v);
    }
    std::shuffle(begin(vars), end(vars), rng);
    auto const len = std::min<std::int64_t>(uniform(rng, 1, 3), static_cast<std::int64_t>(vars.size()));
    auto clause = std::vector<std::int64_t>{};
    for (auto k = 0; k != len; ++k) {
      clause.push_back(coin(rng) ? vars[k] : -vars[k]);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

// k <= 3 classes of size <= 3 with each cross pair present independently.
inline reductions::multicolored_graph random_mcc(rng_t& rng) {
  auto g = reductions::multicolored_graph{};
  auto const k = uniform(rng, 2, 3);
  for (auto i = 0; i != k; ++i) {
    g.class_sizes.push_back(static_cast<std::size_t>(uniform(rng, 1, 3)));
  }
  auto const p = 0.3 + 0.5 * std::uniform_real_distribution<double>{}(rng);
  for (auto i = std::size_t{0}; i != g.class_sizes.size(); ++i) {
    for (auto j = i + 1; j != g.class_sizes.size(); ++j) {
      for (auto a = std::size_t{0}; a != g.class_sizes[i]; ++a) {
        for (auto b = std::size_t{0}; b != g.class_sizes[j]; ++b) {
          if (coin(rng, p)) {
            g.edges.push_back({{i, a}, {j, b}});
          }
        }
      }
    }
  }
  return g;
}

}  // namespace drp::testing
