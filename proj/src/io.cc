#include "drp/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "fmt/core.h"

namespace drp::io {

namespace {

std::vector<std::string> tokens(std::string const& line) {
  auto in = std::istringstream{line};
  auto out = std::vector<std::string>{};
  for (auto tok = std::string{}; in >> tok;) {
    out.push_back(tok);
  }
  return out;
}

bool skipped(std::vector<std::string> const& tok) {
  return tok.empty() || tok.front().starts_with('#');
}

std::int64_t to_int(std::string const& s, std::size_t const line,
                    char const* what) {
  auto value = std::int64_t{};
  auto const* first = s.data();
  auto const* last = s.data() + s.size();
  auto const [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw parse_error{fmt::format("line {}: {} is not an integer: '{}'", line,
                                  what, s),
                      line};
  }
  return value;
}

std::int64_t to_nonneg(std::string const& s, std::size_t const line,
                       char const* what) {
  auto const v = to_int(s, line, what);
  if (v < 0) {
    throw parse_error{fmt::format("line {}: {} must be non-negative", line, what),
                      line};
  }
  return v;
}

void expect_arity(std::vector<std::string> const& tok, std::size_t const n,
                  std::size_t const line) {
  if (tok.size() != n) {
    throw parse_error{fmt::format("line {}: '{}' expects {} fields, got {}",
                                  line, tok.front(), n - 1, tok.size() - 1),
                      line};
  }
}

bool is_number(std::string_view s) {
  return !s.empty() &&
         std::all_of(begin(s), end(s), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

graph_file read_graph(std::istream& in) {
  auto n = std::optional<std::size_t>{};
  auto m = std::size_t{0};
  auto arcs = std::vector<time_arc>{};
  auto arc_lines = std::vector<std::size_t>{};
  auto names = std::map<vertex_id, std::string>{};
  auto taken = std::map<std::string, vertex_id, std::less<>>{};

  auto line_no = std::size_t{0};
  for (auto line = std::string{}; std::getline(in, line);) {
    ++line_no;
    auto const tok = tokens(line);
    if (skipped(tok)) {
      continue;
    }
    auto const& kw = tok.front();
    if (!n.has_value()) {
      if (kw != "temporal") {
        throw parse_error{
            fmt::format("line {}: expected header 'temporal <n> <m>'", line_no),
            line_no};
      }
      expect_arity(tok, 3, line_no);
      n = static_cast<std::size_t>(to_nonneg(tok[1], line_no, "vertex count"));
      m = static_cast<std::size_t>(to_nonneg(tok[2], line_no, "arc count"));
      if (*n == 0) {
        throw parse_error{fmt::format("line {}: vertex count must be positive",
                                      line_no),
                          line_no};
      }
      continue;
    }
    auto const id = [&](std::string const& s) {
      auto const v = to_nonneg(s, line_no, "vertex id");
      if (static_cast<std::size_t>(v) >= *n) {
        throw parse_error{
            fmt::format("line {}: vertex id {} out of range [0, {})", line_no, v, *n),
            line_no};
      }
      return static_cast<vertex_id>(v);
    };
    if (kw == "arc") {
      expect_arity(tok, 5, line_no);
      arcs.push_back({id(tok[1]), id(tok[2]), to_nonneg(tok[3], line_no, "time"),
                      to_nonneg(tok[4], line_no, "traversal time")});
      arc_lines.push_back(line_no);
    } else if (kw == "name") {
      expect_arity(tok, 3, line_no);
      auto const v = id(tok[1]);
      if (is_number(tok[2])) {
        throw parse_error{
            fmt::format("line {}: name '{}' would shadow a vertex id", line_no, tok[2]),
            line_no};
      }
      if (names.contains(v) || taken.contains(tok[2])) {
        throw parse_error{fmt::format("line {}: duplicate name", line_no), line_no};
      }
      names[v] = tok[2];
      taken[tok[2]] = v;
    } else if (kw == "temporal") {
      throw parse_error{fmt::format("line {}: repeated header", line_no), line_no};
    } else {
      throw parse_error{fmt::format("line {}: unknown directive '{}'", line_no, kw),
                        line_no};
    }
  }
  if (!n.has_value()) {
    throw parse_error{"missing header 'temporal <n> <m>'", line_no};
  }
  if (arcs.size() != m) {
    throw parse_error{fmt::format("header announces {} arcs, file has {}", m,
                                  arcs.size()),
                      line_no};
  }
  try {
    return graph_file{build_graph(*n, std::move(arcs)), std::move(names)};
  } catch (validation_error const& e) {
    auto const line =
        e.index() < arc_lines.size() ? arc_lines[e.index()] : line_no;
    throw parse_error{fmt::format("line {}: {}", line, e.what()), line};
  }
}

graph_file read_graph_file(std::filesystem::path const& path) {
  auto in = std::ifstream{path};
  if (!in) {
    throw parse_error{fmt::format("cannot open '{}'", path.string()), 0};
  }
  return read_graph(in);
}

void write_graph(std::ostream& out, graph_file const& f) {
  auto const& g = f.graph;
  out << fmt::format("temporal {} {}\n", g.vertex_count(), g.arc_count());
  for (auto const& a : g.arcs()) {
    out << fmt::format("arc {} {} {} {}\n", a.src, a.dst, a.t, a.lambda);
  }
  for (auto const& [v, name] : f.names) {
    out << fmt::format("name {} {}\n", v, name);
  }
}

std::optional<vertex_id> resolve_vertex(graph_file const& f,
                                        std::string_view token) {
  if (is_number(token)) {
    auto v = std::uint64_t{};
    auto const [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc{} && v < f.graph.vertex_count()) {
      return static_cast<vertex_id>(v);
    }
    return std::nullopt;
  }
  for (auto const& [v, name] : f.names) {
    if (name == token) {
      return v;
    }
  }
  return std::nullopt;
}

std::string vertex_label(graph_file const& f, vertex_id const v) {
  auto const it = f.names.find(v);
  return it == end(f.names) ? std::to_string(v) : it->second;
}

reductions::cnf_instance read_dimacs(std::istream& in) {
  auto cnf = reductions::cnf_instance{};
  auto declared = std::optional<std::size_t>{};
  auto current = std::vector<std::int64_t>{};
  auto line_no = std::size_t{0};
  for (auto line = std::string{}; std::getline(in, line);) {
    ++line_no;
    auto const tok = tokens(line);
    if (tok.empty() || tok.front() == "c" || tok.front().starts_with('%')) {
      continue;
    }
    if (tok.front() == "p") {
      if (declared.has_value()) {
        throw parse_error{fmt::format("line {}: repeated problem line", line_no),
                          line_no};
      }
      if (tok.size() != 4 || tok[1] != "cnf") {
        throw parse_error{
            fmt::format("line {}: expected 'p cnf <vars> <clauses>'", line_no), line_no};
      }
      cnf.variable_count =
          static_cast<std::size_t>(to_nonneg(tok[2], line_no, "variable count"));
      declared = static_cast<std::size_t>(to_nonneg(tok[3], line_no, "clause count"));
      continue;
    }
    if (!declared.has_value()) {
      throw parse_error{fmt::format("line {}: clause before problem line", line_no),
                        line_no};
    }
    for (auto const& t : tok) {
      auto const lit = to_int(t, line_no, "literal");
      if (lit == 0) {
        if (current.empty()) {
          throw parse_error{fmt::format("line {}: empty clause", line_no), line_no};
        }
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      auto const v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (v > cnf.variable_count) {
        throw parse_error{
            fmt::format("line {}: variable {} exceeds declared count", line_no, v),
            line_no};
      }
      current.push_back(lit);
    }
  }
  if (!declared.has_value()) {
    throw parse_error{"missing problem line 'p cnf'", line_no};
  }
  if (!current.empty()) {
    // Tolerate a final clause without its terminating 0.
    cnf.clauses.push_back(std::move(current));
  }
  if (cnf.clauses.size() != *declared) {
    throw parse_error{fmt::format("problem line announces {} clauses, file has {}",
                                  *declared, cnf.clauses.size()),
                      line_no};
  }
  return cnf;
}

reductions::multicolored_graph read_mcc(std::istream& in) {
  auto g = reductions::multicolored_graph{};
  auto k = std::optional<std::size_t>{};
  auto seen = std::vector<bool>{};
  auto line_no = std::size_t{0};
  for (auto line = std::string{}; std::getline(in, line);) {
    ++line_no;
    auto const tok = tokens(line);
    if (skipped(tok)) {
      continue;
    }
    auto const& kw = tok.front();
    if (!k.has_value()) {
      if (kw != "mcc") {
        throw parse_error{fmt::format("line {}: expected header 'mcc <k>'", line_no),
                          line_no};
      }
      expect_arity(tok, 2, line_no);
      k = static_cast<std::size_t>(to_nonneg(tok[1], line_no, "class count"));
      if (*k < 2) {
        throw parse_error{fmt::format("line {}: need at least two classes", line_no),
                          line_no};
      }
      g.class_sizes.assign(*k, 0);
      seen.assign(*k, false);
      continue;
    }
    auto const cls = [&](std::string const& s) {
      auto const i = to_nonneg(s, line_no, "class");
      if (i < 1 || static_cast<std::size_t>(i) > *k) {
        throw parse_error{fmt::format("line {}: class {} out of range", line_no, i),
                          line_no};
      }
      return static_cast<std::size_t>(i - 1);
    };
    if (kw == "class") {
      expect_arity(tok, 3, line_no);
      auto const i = cls(tok[1]);
      if (seen[i]) {
        throw parse_error{fmt::format("line {}: class {} declared twice", line_no, i + 1),
                          line_no};
      }
      seen[i] = true;
      g.class_sizes[i] = static_cast<std::size_t>(to_nonneg(tok[2], line_no, "size"));
    } else if (kw == "edge") {
      expect_arity(tok, 5, line_no);
      auto const i = cls(tok[1]);
      auto const j = cls(tok[3]);
      auto const member = [&](std::size_t c, std::string const& s) {
        auto const a = to_nonneg(s, line_no, "vertex");
        if (!seen[c] || a < 1 || static_cast<std::size_t>(a) > g.class_sizes[c]) {
          throw parse_error{
              fmt::format("line {}: vertex {} not in class {}", line_no, a, c + 1),
              line_no};
        }
        return static_cast<std::size_t>(a - 1);
      };
      if (i == j) {
        throw parse_error{fmt::format("line {}: edge inside class {}", line_no, i + 1),
                          line_no};
      }
      g.edges.push_back({{i, member(i, tok[2])}, {j, member(j, tok[4])}});
    } else {
      throw parse_error{fmt::format("line {}: unknown directive '{}'", line_no, kw),
                        line_no};
    }
  }
  if (!k.has_value()) {
    throw parse_error{"missing header 'mcc <k>'", line_no};
  }
  for (auto i = std::size_t{0}; i != *k; ++i) {
    if (!seen[i] || g.class_sizes[i] == 0) {
      throw parse_error{fmt::format("class {} missing or empty", i + 1), line_no};
    }
  }
  return g;
}

}  // namespace drp::io
