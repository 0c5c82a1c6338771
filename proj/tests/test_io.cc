#include <sstream>
#include <string>

#include "doctest.h"

#include "drp/io.h"
#include "drp/reductions.h"
#include "support.h"

using namespace drp;

namespace {

std::size_t error_line(std::string const& text) {
  auto in = std::istringstream{text};
  try {
    io::read_graph(in);
  } catch (io::parse_error const& e) {
    return e.index();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph round trip keeps arcs and names") {
  auto const f = io::graph_file{testing::example_graph(), {{0, "s"}, {4, "z"}}};
  auto out = std::ostringstream{};
  io::write_graph(out, f);
  auto in = std::istringstream{out.str()};
  auto const back = io::read_graph(in);
  CHECK(back.graph.vertex_count() == 5);
  REQUIRE(back.graph.arc_count() == 6);
  for (auto a = arc_id{0}; a != 6; ++a) {
    CHECK(back.graph.arc(a) == f.graph.arc(a));
  }
  CHECK(back.names == f.names);
  CHECK(io::resolve_vertex(back, "z") == vertex_id{4});
  CHECK(io::resolve_vertex(back, "3") == vertex_id{3});
  CHECK_FALSE(io::resolve_vertex(back, "5").has_value());
  CHECK_FALSE(io::resolve_vertex(back, "q").has_value());
  CHECK(io::vertex_label(back, 0) == "s");
  CHECK(io::vertex_label(back, 2) == "2");
}

TEST_CASE("comments and blank lines are skipped") {
  auto in = std::istringstream{"# header comes next\n\ntemporal 2 1\n  # indented\narc 0 1 0 0\n"};
  CHECK(io::read_graph(in).graph.arc_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("arc 0 1 2 3\n") == 1);
  CHECK(error_line("temporal 2 1\n\narc 0 2 1 1\n") == 3);
  CHECK(error_line("temporal 2 1\narc 0 1 x 1\n") == 2);
  CHECK(error_line("temporal 2 1\narc 0 1 -1 1\n") == 2);
  CHECK(error_line("temporal 2 1\narc 0 1 1\n") == 2);
  CHECK(error_line("temporal 2 1\narc 0 1 1 1\nname 1 7\n") == 3);
  CHECK(error_line("temporal 2 1\narc 0 1 1 1\nname 0 a\nname 1 a\n") == 4);
  CHECK(error_line("temporal 2 1\narc 0 1 1 1\nedge 0 1\n") == 3);
  CHECK(error_line("temporal 2 2\narc 0 1 1 1\n") == 2);
  CHECK(error_line("temporal 0 0\n") == 1);
  CHECK(error_line("temporal 2 1\narc 0 1 1 1152921504606846976\n") == 2);
  CHECK(error_line("temporal 2 1\narc 0 1 1 1\n") == 0);
}

TEST_CASE("DIMACS") {
  auto in = std::istringstream{"c example\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n"};
  auto const cnf = io::read_dimacs(in);
  CHECK(cnf.variable_count == 3);
  CHECK(cnf.clauses == std::vector<std::vector<std::int64_t>>{{1, -2}, {2, 3, -1}});

  auto const fails = [](std::string const& text) {
    auto s = std::istringstream{text};
    CHECK_THROWS_AS(io::read_dimacs(s), io::parse_error);
  };
  fails("1 2 0\n");
  fails("p cnf 2 1\n1 3 0\n");
  fails("p cnf 2 2\n1 2 0\n");
  fails("p cnf 2 1\n0\n");
  fails("p cnf 2 1\np cnf 2 1\n1 0\n");
  fails("p sat 2 1\n1 0\n");
}

TEST_CASE("multicolored graphs") {
  auto in = std::istringstream{"mcc 2\nclass 1 2\nclass 2 1\nedge 1 2 2 1\n"};
  auto const g = io::read_mcc(in);
  CHECK(g.class_sizes == std::vector<std::size_t>{2, 1});
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].first == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(g.edges[0].second == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(reductions::has_multicolored_clique(g));

  auto const fails = [](std::string const& text) {
    auto s = std::istringstream{text};
    CHECK_THROWS_AS(io::read_mcc(s), io::parse_error);
  };
  fails("mcc 1\nclass 1 1\n");
  fails("mcc 2\nclass 1 1\n");
  fails("mcc 2\nclass 1 1\nclass 2 1\nedge 1 1 1 1\n");
  fails("mcc 2\nclass 1 1\nclass 2 1\nedge 1 2 2 1\n");
  fails("mcc 2\nclass 1 1\nclass 1 1\n");
  fails("class 1 1\n");
}

}  // TEST_SUITE
