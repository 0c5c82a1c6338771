#include "drp/cli.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fmt/core.h"
#include "json.hpp"

#include "drp/delay_oracle.h"
#include "drp/fes_solver.h"
#include "drp/generate.h"
#include "drp/io.h"
#include "drp/pareto_solver.h"
#include "drp/reductions.h"
#include "drp/route_verifier.h"
#include "drp/tfvs_solver.h"

namespace drp::cli {

namespace {

// Internal early exit carrying the process status and a one-line reason.
struct failure {
  int code;
  std::string reason;
};

template <typename F>
void parallel_for(std::size_t const count, std::size_t jobs, F&& f) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  if (jobs == 1) {
    for (auto i = std::size_t{0}; i != count; ++i) {
      f(i);
    }
    return;
  }
  auto next = std::atomic<std::size_t>{0};
  auto errors = std::vector<std::exception_ptr>(jobs);
  {
    auto workers = std::vector<std::jthread>{};
    for (auto w = std::size_t{0}; w != jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (auto i = next++; i < count; i = next++) {
            f(i);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          next = count;
        }
      });
    }
  }
  for (auto const& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

std::vector<std::string> split_tokens(std::vector<std::string> const& in) {
  auto out = std::vector<std::string>{};
  for (auto s : in) {
    std::replace(begin(s), end(s), ',', ' ');
    auto ss = std::istringstream{s};
    for (auto tok = std::string{}; ss >> tok;) {
      out.push_back(tok);
    }
  }
  return out;
}

io::graph_file load(std::string const& path) {
  try {
    return io::read_graph_file(path);
  } catch (io::parse_error const& e) {
    throw failure{kUsage, fmt::format("{}: {}", path, e.what())};
  }
}

vertex_id vertex_arg(io::graph_file const& f, std::string const& tok) {
  auto const v = io::resolve_vertex(f, tok);
  if (!v.has_value()) {
    throw failure{kUsage, fmt::format("unknown vertex '{}'", tok)};
  }
  return *v;
}

std::string route_text(io::graph_file const& f, route const& r) {
  auto out = std::string{};
  for (auto const v : r) {
    if (!out.empty()) {
      out += ' ';
    }
    out += io::vertex_label(f, v);
  }
  return out;
}

void check_nonneg(std::int64_t const v, char const* what) {
  if (v < 0) {
    throw failure{kUsage, fmt::format("{} must be non-negative", what)};
  }
}

// ---------------------------------------------------------------- verify

struct verify_args {
  std::string graph;
  std::vector<std::string> route;
  std::int64_t x{0};
  std::int64_t delta{0};
  std::string kind{"traversal"};
  bool table{false};
};

int cmd_verify(verify_args const& a, std::ostream& out) {
  check_nonneg(a.x, "x");
  check_nonneg(a.delta, "delta");
  auto const f = load(a.graph);
  auto r = route{};
  for (auto const& tok : split_tokens(a.route)) {
    r.push_back(vertex_arg(f, tok));
  }
  if (r.empty()) {
    throw failure{kUsage, "empty route"};
  }
  if (!is_duplicate_free(r)) {
    throw failure{kUsage, "route visits a vertex twice"};
  }
  // Robustness does not depend on the delay kind, so both kinds share the
  // same table.
  auto const table = compute_worst_case_table(
      f.graph, r, static_cast<std::size_t>(a.x), a.delta);
  if (a.table) {
    auto header = std::string{"prefix vertex"};
    for (auto y = std::int64_t{0}; y <= a.x; ++y) {
      header += fmt::format(" y={}", y);
    }
    out << header << '\n';
    for (auto j = std::size_t{0}; j != table.rows.size(); ++j) {
      auto line = fmt::format("{} {}", j, io::vertex_label(f, r[j]));
      for (auto const t : table.rows[j]) {
        line += ' ' + to_string(t);
      }
      out << line << '\n';
    }
  }
  if (auto const b = table.first_break()) {
    out << fmt::format("broken at prefix {}, budget {}\n", b->prefix, b->budget);
    return kNo;
  }
  out << "robust\n";
  return kYes;
}

// ----------------------------------------------------------------- solve

struct solve_args {
  std::string graph;
  std::string s;
  std::string z;
  std::int64_t x{0};
  std::int64_t delta{0};
  std::string algo{"auto"};
  bool all_check{false};
  std::size_t fes_threshold{12};
  std::optional<std::uint64_t> budget;
  std::vector<std::string> fvs;
  std::size_t jobs{1};
};

struct run_options {
  std::optional<std::uint64_t> budget;
  std::optional<tfvs::timed_fvs> fvs;
};

struct outcome {
  std::string algo;
  std::optional<route> path;
  bool over_budget{false};
  std::string note;
  std::int64_t micros{0};
};

outcome run_algorithm(std::string const& algo, drp_instance const& inst,
                      run_options const& opt) {
  auto res = outcome{};
  res.algo = algo;
  auto const start = std::chrono::steady_clock::now();
  try {
    if (algo == "pareto") {
      if (auto const r = pareto::solve(inst)) {
        res.path = r->path;
      }
    } else if (algo == "fes") {
      res.path = fes::solve(inst).path;
    } else if (algo == "tfvs") {
      auto b = tfvs::search_budget{};
      if (opt.budget.has_value()) {
        b.max_nodes = *opt.budget;
      }
      res.path = tfvs::solve(inst, opt.fvs, b).path;
    } else if (algo == "brute") {
      auto b = oracle::budget{};
      if (opt.budget.has_value()) {
        b.max_delay_sets = b.max_paths = b.max_arc_sequences = *opt.budget;
      }
      res.path = oracle::brute_force_solve(inst, b);
    } else {
      throw failure{kUsage, fmt::format("unknown algorithm '{}'", algo)};
    }
  } catch (budget_exceeded const& e) {
    res.over_budget = true;
    res.note = e.what();
  }
  res.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return res;
}

std::optional<tfvs::timed_fvs> parse_fvs(io::graph_file const& f,
                                         std::vector<std::string> const& items) {
  if (items.empty()) {
    return std::nullopt;
  }
  auto out = tfvs::timed_fvs{};
  for (auto const& tok : split_tokens(items)) {
    auto const colon = tok.rfind(':');
    if (colon == std::string::npos) {
      throw failure{kUsage, fmt::format("appearance '{}' is not vertex:time", tok)};
    }
    auto const v = vertex_arg(f, tok.substr(0, colon));
    auto t = std::int64_t{};
    try {
      auto used = std::size_t{0};
      t = std::stoll(tok.substr(colon + 1), &used);
      if (used != tok.size() - colon - 1 || t < 0) {
        throw std::invalid_argument{""};
      }
    } catch (std::logic_error const&) {
      throw failure{kUsage, fmt::format("appearance '{}' has a bad time", tok)};
    }
    out.push_back({v, t});
  }
  return out;
}

int cmd_solve(solve_args const& a, std::ostream& out, std::ostream& err) {
  check_nonneg(a.x, "x");
  check_nonneg(a.delta, "delta");
  auto const f = load(a.graph);
  auto inst = drp_instance{f.graph, vertex_arg(f, a.s), vertex_arg(f, a.z),
                           static_cast<std::size_t>(a.x), a.delta};
  auto opt = run_options{a.budget, parse_fvs(f, a.fvs)};

  auto algo = a.algo;
  if (algo == "auto") {
    algo = fes::feedback_edge_number(inst) <= a.fes_threshold ? "fes" : "pareto";
  }

  if (!a.all_check) {
    auto const res = run_algorithm(algo, inst, opt);
    if (res.over_budget) {
      throw failure{kBudget, res.note};
    }
    if (!res.path.has_value()) {
      out << "no robust route\n";
      return kNo;
    }
    out << route_text(f, *res.path) << '\n';
    return kYes;
  }

  auto const algos = std::vector<std::string>{"pareto", "fes", "tfvs", "brute"};
  auto results = std::vector<outcome>(algos.size());
  parallel_for(algos.size(), a.jobs,
               [&](std::size_t i) { results[i] = run_algorithm(algos[i], inst, opt); });

  auto answers = std::vector<bool>{};
  auto summary = std::string{};
  auto witness = std::optional<route>{};
  auto bad_witness = false;
  for (auto const& r : results) {
    if (r.over_budget) {
      out << fmt::format("{}: skipped ({})\n", r.algo, r.note);
      continue;
    }
    auto const yes = r.path.has_value();
    answers.push_back(yes);
    summary += fmt::format("{}{}={}", summary.empty() ? "" : ", ", r.algo,
                           yes ? "yes" : "no");
    if (yes) {
      auto const ok = is_delay_robust(inst.graph, *r.path, inst.x, inst.delta);
      bad_witness = bad_witness || !ok;
      out << fmt::format("{}: yes {}{}\n", r.algo, route_text(f, *r.path),
                         ok ? "" : " (witness fails verification)");
      if (r.algo == algo || !witness.has_value()) {
        witness = r.path;
      }
    } else {
      out << fmt::format("{}: no\n", r.algo);
    }
  }
  if (answers.empty()) {
    throw failure{kBudget, "every algorithm exceeded its budget"};
  }
  auto const agree = std::all_of(begin(answers), end(answers),
                                 [&](bool b) { return b == answers.front(); });
  if (!agree || bad_witness) {
    err << fmt::format("error: algorithms disagree ({})\n", summary);
    return kDisagreement;
  }
  if (!answers.front()) {
    out << "no robust route\n";
    return kNo;
  }
  out << route_text(f, *witness) << '\n';
  return kYes;
}

// -------------------------------------------------------------- generate

struct generate_args {
  std::string from_cnf;
  std::string from_mcc;
  std::string random;
  std::string output;
  std::string selection_dummies{"before"};
};

std::filesystem::path sidecar_path(std::filesystem::path p) {
  return p.replace_extension(".meta.json");
}

void write_outputs(std::string const& output, io::graph_file const& f,
                   nlohmann::ordered_json const& meta, std::ostream& out) {
  auto g = std::ofstream{output};
  if (!g) {
    throw failure{kUsage, fmt::format("cannot write '{}'", output)};
  }
  io::write_graph(g, f);
  auto const side = sidecar_path(output);
  auto m = std::ofstream{side};
  if (!m) {
    throw failure{kUsage, fmt::format("cannot write '{}'", side.string())};
  }
  m << meta.dump(2) << '\n';
  out << fmt::format("wrote {} ({} vertices, {} arcs) and {}\n", output,
                     f.graph.vertex_count(), f.graph.arc_count(), side.string());
}

int cmd_generate(generate_args const& a, std::ostream& out) {
  auto const sources = int{!a.from_cnf.empty()} + int{!a.from_mcc.empty()} +
                       int{!a.random.empty()};
  if (sources != 1) {
    throw failure{kUsage, "give exactly one of --from-cnf, --from-mcc, --random"};
  }
  auto meta = nlohmann::ordered_json{};

  if (!a.random.empty()) {
    auto params = gen::random_params{};
    try {
      params = gen::parse_random_params(a.random);
    } catch (std::invalid_argument const& e) {
      throw failure{kUsage, fmt::format("--random: {}", e.what())};
    }
    auto const inst = gen::random_instance(params);
    meta["source"] = "random";
    meta["spec"] = a.random;
    meta["s"] = inst.s;
    meta["z"] = inst.z;
    meta["x"] = inst.x;
    meta["delta"] = inst.delta;
    meta["expected"] = nullptr;
    write_outputs(a.output, io::graph_file{inst.graph, {}}, meta, out);
    return kYes;
  }

  auto const dummies = [&] {
    if (a.selection_dummies == "before") {
      return reductions::selection_dummies::before_window;
    }
    if (a.selection_dummies == "through") {
      return reductions::selection_dummies::through_window;
    }
    throw failure{kUsage, "--selection-dummies must be 'before' or 'through'"};
  }();

  auto const path = a.from_cnf.empty() ? a.from_mcc : a.from_cnf;
  auto in = std::ifstream{path};
  if (!in) {
    throw failure{kUsage, fmt::format("cannot open '{}'", path)};
  }
  auto mcp = reductions::mcpsat_instance{};
  auto expected = false;
  try {
    if (!a.from_cnf.empty()) {
      auto const cnf = io::read_dimacs(in);
      expected = reductions::solve_cnf(cnf).has_value();
      mcp = reductions::threesat_to_mcpsat(cnf);
      meta["source"] = "cnf";
    } else {
      auto const g = io::read_mcc(in);
      expected = reductions::has_multicolored_clique(g);
      mcp = reductions::mcc_to_mcpsat(g);
      meta["source"] = "mcc";
    }
  } catch (io::parse_error const& e) {
    throw failure{kUsage, fmt::format("{}: {}", path, e.what())};
  } catch (contract_error const& e) {
    throw failure{kUsage, fmt::format("{}: {}", path, e.what())};
  }
  auto const gadget = reductions::mcpsat_to_drp(mcp, dummies);
  auto f = io::graph_file{gadget.drp.graph, {}};
  for (auto v = vertex_id{0}; v != gadget.provenance.size(); ++v) {
    f.names[v] = gadget.provenance[v];
  }
  meta["input"] = path;
  meta["formula"] = reductions::to_string(mcp.phi);
  meta["s"] = gadget.drp.s;
  meta["z"] = gadget.drp.z;
  meta["x"] = gadget.drp.x;
  meta["delta"] = gadget.drp.delta;
  meta["expected"] = expected ? "yes" : "no";
  meta["layout_stretch"] = reductions::layout_stretch(gadget);
  meta["layout"] = gadget.layout;
  meta["provenance"] = gadget.provenance;
  write_outputs(a.output, f, meta, out);
  return kYes;
}

// ----------------------------------------------------------------- bench

struct bench_args {
  std::string suite{"count=10"};
  std::vector<std::string> algos{"pareto", "fes", "tfvs", "brute"};
  std::string csv;
  std::uint64_t seed{1};
  std::size_t jobs{1};
  std::optional<std::uint64_t> budget;
};

int cmd_bench(bench_args const& a, std::ostream& out) {
  auto kv = std::map<std::string, std::int64_t>{};
  try {
    kv = gen::parse_spec(a.suite,
                         {"count", "n", "arcs", "tmax", "lambda", "x", "delta"});
  } catch (std::invalid_argument const& e) {
    throw failure{kUsage, fmt::format("--suite: {}", e.what())};
  }
  for (auto const& [k, v] : kv) {
    check_nonneg(v, k.c_str());
  }
  auto const value = [&](char const* k, std::int64_t def) {
    auto const it = kv.find(k);
    return it == end(kv) ? def : it->second;
  };
  auto const count = static_cast<std::size_t>(value("count", 10));
  auto const algos = split_tokens(a.algos);
  for (auto const& algo : algos) {
    if (algo != "pareto" && algo != "fes" && algo != "tfvs" && algo != "brute") {
      throw failure{kUsage, fmt::format("unknown algorithm '{}'", algo)};
    }
  }

  auto results = std::vector<outcome>(count * algos.size());
  auto sizes = std::vector<drp_instance>(count);
  parallel_for(count, a.jobs, [&](std::size_t i) {
    auto p = gen::random_params{};
    p.n = static_cast<std::size_t>(value("n", 7));
    p.arcs = static_cast<std::size_t>(value("arcs", 14));
    p.tmax = value("tmax", 10);
    p.lambda = value("lambda", 2);
    p.x = static_cast<std::size_t>(value("x", 2));
    p.delta = value("delta", 2);
    p.seed = a.seed + i;
    sizes[i] = gen::random_instance(p);
    for (auto k = std::size_t{0}; k != algos.size(); ++k) {
      results[i * algos.size() + k] =
          run_algorithm(algos[k], sizes[i], run_options{a.budget, std::nullopt});
    }
  });

  auto csv = std::ostringstream{};
  csv << "algo,n,m,x,delta,answer,micros\n";
  for (auto i = std::size_t{0}; i != results.size(); ++i) {
    auto const& r = results[i];
    auto const& inst = sizes[i / algos.size()];
    auto const answer = r.over_budget ? "budget" : r.path.has_value() ? "yes" : "no";
    csv << fmt::format("{},{},{},{},{},{},{}\n", r.algo, inst.graph.vertex_count(),
                       inst.graph.arc_count(), inst.x, inst.delta, answer, r.micros);
  }

  if (a.csv.empty()) {
    out << csv.str();
    return kYes;
  }
  auto file = std::ofstream{a.csv};
  if (!file) {
    throw failure{kUsage, fmt::format("cannot write '{}'", a.csv)};
  }
  file << csv.str();
  out << fmt::format("{:<8} {:>9} {:>6} {:>7} {:>14}\n", "algo", "instances",
                     "yes", "budget", "total_micros");
  for (auto const& algo : algos) {
    auto n = std::size_t{0};
    auto yes = std::size_t{0};
    auto over = std::size_t{0};
    auto micros = std::int64_t{0};
    for (auto const& r : results) {
      if (r.algo == algo) {
        ++n;
        yes += r.path.has_value() ? 1 : 0;
        over += r.over_budget ? 1 : 0;
        micros += r.micros;
      }
    }
    out << fmt::format("{:<8} {:>9} {:>6} {:>7} {:>14}\n", algo, n, yes, over, micros);
  }
  return kYes;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  auto app = CLI::App{"Delay-robust routes in temporal graphs", "drp"};
  app.require_subcommand(1);

  auto va = verify_args{};
  auto* verify = app.add_subcommand("verify", "Check whether a route is x-delay-robust");
  verify->add_option("graph", va.graph, "Temporal graph file")->required();
  verify->add_option("--route", va.route, "Route as vertex ids or names")
      ->required();
  verify->add_option("-x,--x", va.x, "Number of delays")->required();
  verify->add_option("-d,--delta", va.delta, "Delay magnitude")->required();
  verify->add_option("--kind", va.kind, "Delay kind")
      ->check(CLI::IsMember({"traversal", "starting"}));
  verify->add_flag("--table", va.table, "Print the worst-case arrival table");

  auto sa = solve_args{};
  auto* solve = app.add_subcommand("solve", "Search for an x-delay-robust route");
  solve->add_option("graph", sa.graph, "Temporal graph file")->required();
  solve->add_option("-s,--s", sa.s, "Source vertex")->required();
  solve->add_option("-z,--z", sa.z, "Target vertex")->required();
  solve->add_option("-x,--x", sa.x, "Number of delays")->required();
  solve->add_option("-d,--delta", sa.delta, "Delay magnitude")->required();
  solve->add_option("--algo", sa.algo, "Algorithm")
      ->check(CLI::IsMember({"auto", "pareto", "fes", "tfvs", "brute"}));
  solve->add_flag("--all-check", sa.all_check,
                  "Run every algorithm and fail on disagreement");
  solve->add_option("--fes-threshold", sa.fes_threshold,
                    "auto picks fes up to this feedback edge number");
  solve->add_option("--budget", sa.budget, "Search budget for brute and tfvs");
  solve->add_option("--fvs", sa.fvs,
                    "Timed feedback vertex set for tfvs as vertex:time items");
  solve->add_option("--jobs", sa.jobs, "Worker threads for --all-check");

  auto ga = generate_args{};
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("--from-cnf", ga.from_cnf, "DIMACS CNF source");
  generate->add_option("--from-mcc", ga.from_mcc, "Multicolored graph source");
  generate->add_option("--random", ga.random,
                       "Random graph spec, e.g. \"n=20 arcs=60 seed=7\"");
  generate->add_option("-o,--output", ga.output, "Output graph file")->required();
  generate->add_option("--selection-dummies", ga.selection_dummies,
                       "Selection dummy window: before or through");

  auto ba = bench_args{};
  auto* bench = app.add_subcommand("bench", "Time the solvers on random instances");
  bench->add_option("--suite", ba.suite,
                    "Suite spec: count n arcs tmax lambda x delta");
  bench->add_option("--algos", ba.algos, "Algorithms to run");
  bench->add_option("--csv", ba.csv, "CSV output file (default: stdout)");
  bench->add_option("--seed", ba.seed, "Seed of the first instance");
  bench->add_option("--jobs", ba.jobs, "Worker threads");
  bench->add_option("--budget", ba.budget, "Search budget for brute and tfvs");

  std::reverse(begin(args), end(args));
  try {
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(va, out);
    }
    if (solve->parsed()) {
      return cmd_solve(sa, out, err);
    }
    if (generate->parsed()) {
      return cmd_generate(ga, out);
    }
    return cmd_bench(ba, out);
  } catch (failure const& f) {
    err << "error: " << f.reason << '\n';
    return f.code;
  } catch (contract_error const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (budget_exceeded const& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  }
}

}  // namespace drp::cli
