#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "drp/delay_oracle.h"
#include "drp/tfvs_solver.h"
#include "support.h"

using namespace drp;
using tfvs::appearance;
using tfvs::timed_fvs;

namespace {

// Smallest timed feedback vertex set by plain subset enumeration over the
// appearances (v, t) with t the time of an arc at v; nullopt above max_size.
std::optional<std::size_t> exhaustive_tfvs_size(temporal_graph const& g,
                                                std::size_t max_size) {
  auto pool = std::set<appearance>{};
  for (auto const& a : g.arcs()) {
    pool.insert({a.src, a.t});
    pool.insert({a.dst, a.t});
  }
  auto const items = std::vector<appearance>(begin(pool), end(pool));
  auto chosen = timed_fvs{};
  auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> bool {
    if (left == 0) {
      return tfvs::is_timed_fvs(g, chosen);
    }
    for (auto i = from; i + left <= items.size(); ++i) {
      chosen.push_back(items[i]);
      if (self(self, i + 1, left - 1)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  for (auto k = std::size_t{0}; k <= max_size; ++k) {
    chosen.clear();
    if (rec(rec, 0, k)) {
      return k;
    }
  }
  return std::nullopt;
}

arrival_vector vec(std::initializer_list<std::int64_t> values) {
  auto out = arrival_vector{};
  for (auto const v : values) {
    out.push_back(v < 0 ? ext_time::inf() : ext_time{v});
  }
  return out;
}

}  // namespace

TEST_SUITE("tfvs_solver") {

TEST_CASE("removing appearances") {
  auto const g = testing::example_graph();
  auto const h = tfvs::remove_appearances(g, {{2, 5}});
  CHECK(h.arc_count() == 5);
  CHECK(h.pair_arcs(2, 3).size() == 1);
  CHECK(h.pair_arcs(1, 2).size() == 2);
  // (b, 8) hits the arc arriving at b, not the one leaving it.
  auto const k = tfvs::remove_appearances(g, {{2, 8}, {2, 8}});
  CHECK(k.arc_count() == 5);
  CHECK(k.pair_arcs(1, 2).size() == 1);
  CHECK(tfvs::remove_appearances(g, {{2, 6}}).arc_count() == 6);
}

TEST_CASE("timed feedback vertex sets of a triangle") {
  auto const g = build_graph(3, {{0, 1, 1, 0}, {1, 2, 2, 0}, {2, 0, 3, 0}});
  CHECK_FALSE(tfvs::is_timed_fvs(g, {}));
  CHECK(tfvs::is_timed_fvs(g, {{0, 1}}));
  CHECK(tfvs::is_timed_fvs(g, {{0, 3}}));
  CHECK_FALSE(tfvs::is_timed_fvs(g, {{0, 2}}));
  CHECK(tfvs::compute_tfvs(g).size() == 1);
  CHECK(tfvs::compute_tfvs(testing::example_graph()).empty());
}

TEST_CASE("one appearance can break two cycle edges") {
  // Square whose arcs at vertex 0 share time 4: (0, 4) removes both.
  auto const g = build_graph(4, {{0, 1, 4, 0}, {1, 2, 5, 0}, {1, 2, 6, 0},
                                 {2, 3, 7, 0}, {3, 0, 4, 0}});
  auto const X = tfvs::compute_tfvs(g);
  CHECK(X.size() == 1);
  CHECK(tfvs::is_timed_fvs(g, X));
  // Two parallel triangles sharing no appearance need two.
  auto const h = build_graph(5, {{0, 1, 1, 0}, {1, 2, 2, 0}, {2, 0, 3, 0},
                                 {2, 3, 4, 0}, {3, 4, 5, 0}, {4, 2, 6, 0}});
  CHECK(tfvs::compute_tfvs(h).size() == 2);
  CHECK(tfvs::minimum_tfvs(h, 1) == std::nullopt);
}

TEST_CASE("minimum matches subset enumeration") {
  auto rng = testing::rng_t{51};
  auto compared = 0;
  for (auto k = 0; k != 300; ++k) {
    auto const inst = testing::random_drp(rng, 8, 12);
    auto const expect = exhaustive_tfvs_size(inst.graph, 3);
    auto const found = tfvs::minimum_tfvs(inst.graph, 3);
    CHECK(expect.has_value() == found.has_value());
    if (expect && found) {
      ++compared;
      CHECK(*expect == found->size());
      CHECK(tfvs::is_timed_fvs(inst.graph, *found));
    }
  }
  CHECK(compared > 150);
}

TEST_CASE("search budget") {
  auto arcs = std::vector<time_arc>{};
  for (auto u = vertex_id{0}; u != 7; ++u) {
    for (auto v = u + 1; v != 7; ++v) {
      arcs.push_back({u, v, u + v, 0});
    }
  }
  auto const k7 = build_graph(7, std::move(arcs));
  CHECK_THROWS_AS(tfvs::compute_tfvs(k7, {50}), budget_exceeded);
}

TEST_CASE("relevant times and rounding") {
  auto const g = testing::example_graph();
  auto const times = tfvs::relevant_times(g, {{1, 4}}, 3);
  CHECK(times == vec({4, 5, 7, 8, -1}));
  CHECK(tfvs::relevant_times(g, {}, 3) == vec({-1}));
  CHECK(tfvs::round_to(times, ext_time{6}) == ext_time{7});
  CHECK(tfvs::round_to(times, ext_time{7}) == ext_time{7});
  CHECK(tfvs::round_to(times, ext_time{9}).is_inf());
  CHECK(tfvs::round_to(vec({1, 2}), ext_time{3}).is_inf());
}

TEST_CASE("check_route on the example network") {
  auto const g = testing::example_graph();
  auto const r = testing::example_route();
  auto const times = vec({0, 12, 15, 20, -1});
  CHECK(tfvs::propagate(g, r, vec({0, 0}), 3) == vec({12, 15}));
  CHECK(tfvs::check_route(g, r, vec({0, 0}), vec({12, 15}), 3, times));
  CHECK_FALSE(tfvs::check_route(g, r, vec({0, 0}), vec({12, 20}), 3, times));
  CHECK_FALSE(tfvs::check_route(g, r, vec({0, 0}), vec({15, 15}), 3, times));
  CHECK(tfvs::check_route(g, r, vec({0, 0}), vec({12, 20}), 4, times));
  CHECK(tfvs::check_route(g, r, vec({0, 0}), vec({12, -1}), 5, times));
  CHECK(tfvs::check_route(g, r, vec({0, -1}), vec({12, -1}), 3, times));
  CHECK_FALSE(tfvs::check_route(g, r, vec({0}), vec({12, 15}), 3, times));
}

TEST_CASE("exactly one end profile passes check_route") {
  auto rng = testing::rng_t{52};
  for (auto k = 0; k != 150; ++k) {
    auto c = testing::random_route_case(rng, 8);
    c.x = std::min<std::size_t>(c.x, 2);
    auto times = std::set<ext_time>{ext_time::inf()};
    while (times.size() != 5) {
      times.insert(ext_time{testing::uniform(rng, 0, 16)});
    }
    auto const t_hat = std::vector<ext_time>(begin(times), end(times));
    auto prof_s = arrival_vector{};
    auto t = testing::uniform(rng, 0, 4);
    for (auto y = std::size_t{0}; y <= c.x; ++y) {
      t += testing::uniform(rng, 0, 3);
      prof_s.push_back(ext_time{t});
    }
    auto expect = tfvs::propagate(c.graph, c.r, prof_s, c.delta);
    for (auto& e : expect) {
      e = tfvs::round_to(t_hat, e);
    }
    auto passing = 0;
    auto prof_z = arrival_vector(c.x + 1);
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == prof_z.size()) {
        if (tfvs::check_route(c.graph, c.r, prof_s, prof_z, c.delta, t_hat)) {
          ++passing;
          CHECK(prof_z == expect);
        }
        return;
      }
      for (auto const v : t_hat) {
        prof_z[j] = v;
        self(self, j + 1);
      }
    };
    rec(rec, 0);
    CHECK(passing == 1);
  }
}

TEST_CASE("solve on the example and with a closing arc") {
  auto inst = drp_instance{testing::example_graph(), 0, 4, 1, 3};
  auto const r = tfvs::solve(inst);
  REQUIRE(r.path.has_value());
  CHECK(*r.path == testing::example_route());
  CHECK(r.fvs.empty());
  inst.delta = 5;
  CHECK_FALSE(tfvs::solve(inst).path.has_value());

  // z -> s closes the only cycle; s -> z direct at 20 is robust with x = 1
  // only through the parallel arc at 21.
  auto arcs = std::vector<time_arc>(begin(inst.graph.arcs()), end(inst.graph.arcs()));
  arcs.push_back({4, 0, 13, 0});
  arcs.push_back({0, 4, 20, 0});
  arcs.push_back({0, 4, 21, 0});
  inst.graph = build_graph(5, arcs);
  auto const c = tfvs::solve(inst);
  CHECK(c.fvs.size() == 1);
  REQUIRE(c.path.has_value());
  CHECK(*c.path == route{0, 4});
  CHECK(is_delay_robust(inst.graph, *c.path, 1, 5));
}

TEST_CASE("agrees with brute force for any valid X") {
  auto rng = testing::rng_t{53};
  auto checked = 0;
  for (auto k = 0; k != 400; ++k) {
    auto const inst = testing::random_drp(rng);
    auto const X = tfvs::minimum_tfvs(inst.graph, 2);
    if (!X) {
      continue;
    }
    ++checked;
    auto const brute = oracle::brute_force_solve(inst).has_value();
    auto const r = tfvs::solve(inst, *X);
    CHECK(r.path.has_value() == brute);
    if (r.path) {
      CHECK(is_delay_robust(inst.graph, *r.path, inst.x, inst.delta));
    }
    // Padding X with an arbitrary arc's tail keeps it valid.
    if (inst.graph.arc_count() != 0) {
      auto padded = *X;
      auto const& a = inst.graph.arc(static_cast<arc_id>(
          testing::uniform(rng, 0, static_cast<std::int64_t>(inst.graph.arc_count()) - 1)));
      padded.push_back({a.src, a.t});
      std::sort(begin(padded), end(padded));
      padded.erase(std::unique(begin(padded), end(padded)), end(padded));
      CHECK(tfvs::solve(inst, padded).path.has_value() == brute);
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("invalid X is rejected") {
  auto const inst = drp_instance{build_graph(3, {{0, 1, 1, 0}, {1, 2, 2, 0}, {2, 0, 3, 0}}), 0, 2, 1, 1};
  CHECK_THROWS_AS(tfvs::solve(inst, timed_fvs{}), contract_error);
  CHECK_NOTHROW(tfvs::solve(inst, timed_fvs{{1, 2}}));
}

}  // TEST_SUITE
