#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "drp/delay_oracle.h"
#include "drp/pareto_solver.h"
#include "support.h"

using namespace drp;

namespace {

arrival_vector vec(std::initializer_list<std::int64_t> values) {
  auto out = arrival_vector{};
  for (auto const v : values) {
    out.push_back(ext_time{v});
  }
  return out;
}

// Earliest arrival at every vertex when leaving s at time 0.
std::vector<ext_time> earliest_arrival(temporal_graph const& g, vertex_id s) {
  auto best = std::vector<ext_time>(g.vertex_count(), ext_time::inf());
  best[s] = ext_time{0};
  for (auto changed = true; changed;) {
    changed = false;
    for (auto const& a : g.arcs()) {
      if (best[a.src] <= ext_time{a.t} && ext_time{a.arrival()} < best[a.dst]) {
        best[a.dst] = ext_time{a.arrival()};
        changed = true;
      }
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("pareto_solver") {

TEST_CASE("dominance") {
  CHECK(pareto::dominates(vec({1, 2, 3}), vec({1, 3, 3})));
  CHECK_FALSE(pareto::dominates(vec({1, 5}), vec({2, 4})));
  CHECK_FALSE(pareto::dominates(vec({2, 4}), vec({1, 5})));
  CHECK(pareto::dominates(vec({2, 4}), vec({2, 4})));
  CHECK(pareto::dominates(vec({2}), arrival_vector{ext_time::inf()}));
  CHECK_THROWS_AS(pareto::dominates(vec({1}), vec({1, 2})), contract_error);
}

TEST_CASE("round_up on the example network") {
  auto const g = testing::example_graph();
  CHECK(pareto::round_up(g, 2, ext_time{6}) == ext_time{9});
  CHECK(pareto::round_up(g, 2, ext_time{5}) == ext_time{5});
  CHECK(pareto::round_up(g, 2, ext_time{10}).is_inf());
  CHECK(pareto::round_up(g, 2, ext_time::inf()).is_inf());
  CHECK(pareto::round_up(g, 4, ext_time{0}).is_inf());
}

TEST_CASE("extend on the example network") {
  auto const g = testing::example_graph();
  CHECK(pareto::extend(g, 0, vec({0, 0}), 1, 3, false) == vec({4, 7}));
  CHECK(pareto::extend(g, 0, vec({0, 0}), 1, 3) == vec({4, 8}));
  CHECK_FALSE(pareto::extend(g, 0, vec({0, 0}), 2, 3).has_value());
  CHECK_FALSE(pareto::extend(g, 0, vec({0, 0}), 1, 5).has_value());
}

TEST_CASE("solve on the example network") {
  auto inst = drp_instance{testing::example_graph(), 0, 4, 1, 3};
  auto const r = pareto::solve(inst);
  REQUIRE(r.has_value());
  CHECK(r->path == testing::example_route());
  CHECK(r->arrival == vec({12, 15}));
  inst.delta = 5;
  CHECK_FALSE(pareto::solve(inst).has_value());
  inst.z = 0;
  auto const trivial = pareto::solve(inst);
  REQUIRE(trivial.has_value());
  CHECK(trivial->path == route{0});
  CHECK(trivial->arrival == vec({0, 0}));
}

TEST_CASE("x = 0 is earliest-arrival search") {
  auto rng = testing::rng_t{31};
  for (auto k = 0; k != 300; ++k) {
    auto inst = testing::random_drp(rng);
    inst.x = 0;
    auto const best = earliest_arrival(inst.graph, inst.s)[inst.z];
    auto const r = pareto::solve(inst);
    CHECK(r.has_value() == best.is_finite());
    if (r) {
      CHECK(r->arrival == arrival_vector{best});
    }
  }
}

TEST_CASE("agrees with brute force, with and without pruning") {
  auto rng = testing::rng_t{32};
  for (auto k = 0; k != 400; ++k) {
    auto const inst = testing::random_drp(rng);
    auto const brute = oracle::brute_force_solve(inst);
    auto const pruned = pareto::solve(inst);
    auto const full = pareto::solve(inst, {false});
    CHECK(pruned.has_value() == brute.has_value());
    CHECK(full.has_value() == brute.has_value());
    if (pruned) {
      CHECK(is_duplicate_free(pruned->path));
      CHECK(pruned->path.front() == inst.s);
      CHECK(pruned->path.back() == inst.z);
      CHECK(is_delay_robust(inst.graph, pruned->path, inst.x, inst.delta));
      CHECK(std::is_sorted(begin(pruned->arrival), end(pruned->arrival)));
    }
  }
}

TEST_CASE("front size stays within the rounding bound") {
  auto rng = testing::rng_t{33};
  for (auto k = 0; k != 300; ++k) {
    auto const inst = testing::random_drp(rng, 7, 18);
    auto st = pareto::stats{};
    (void)pareto::solve(inst, {}, &st);
    for (auto v = vertex_id{0}; v != inst.graph.vertex_count(); ++v) {
      if (v == inst.s || v == inst.z) {
        continue;
      }
      auto const tau = static_cast<double>(inst.graph.departures(v).size());
      CHECK(static_cast<double>(st.max_front_size[v]) <=
            std::pow(tau, static_cast<double>(inst.x)));
    }
  }
}

}  // TEST_SUITE
