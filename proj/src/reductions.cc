#include "drp/reductions.h"

#include <algorithm>
#include <set>

#include "fmt/core.h"

namespace drp::reductions {

std::size_t formula::literal_count() const {
  if (type == kind::lit) {
    return 1;
  }
  auto total = std::size_t{0};
  for (auto const& c : children) {
    total += c.literal_count();
  }
  return total;
}

std::string to_string(formula const& f) {
  switch (f.type) {
    case formula::kind::lit: return fmt::format("x{},{}", f.cls + 1, f.var + 1);
    case formula::kind::all:
    case formula::kind::any: {
      if (f.children.empty()) {
        return f.type == formula::kind::all ? "true" : "false";
      }
      auto const sep = f.type == formula::kind::all ? " & " : " | ";
      auto out = std::string{"("};
      for (auto i = std::size_t{0}; i != f.children.size(); ++i) {
        if (i != 0) {
          out += sep;
        }
        out += to_string(f.children[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::size_t mcpsat_instance::max_class_size() const {
  return class_sizes.empty()
             ? 0
             : *std::max_element(begin(class_sizes), end(class_sizes));
}

namespace {

void check_literals(formula const& f, std::vector<std::size_t> const& sizes) {
  if (f.type == formula::kind::lit) {
    if (f.cls >= sizes.size() || f.var >= sizes[f.cls]) {
      throw contract_error{fmt::format("literal x{},{} references no variable",
                                       f.cls + 1, f.var + 1)};
    }
    return;
  }
  for (auto const& c : f.children) {
    check_literals(c, sizes);
  }
}

bool eval(formula const& f, std::vector<std::size_t> const& choice) {
  switch (f.type) {
    case formula::kind::lit: return choice[f.cls] == f.var;
    case formula::kind::all:
      return std::all_of(begin(f.children), end(f.children),
                         [&](formula const& c) { return eval(c, choice); });
    case formula::kind::any:
      return std::any_of(begin(f.children), end(f.children),
                         [&](formula const& c) { return eval(c, choice); });
  }
  return false;
}

bool is_true(formula const& f) {
  return f.type == formula::kind::all && f.children.empty();
}
bool is_false(formula const& f) {
  return f.type == formula::kind::any && f.children.empty();
}

}  // namespace

void validate(mcpsat_instance const& inst) {
  if (std::find(begin(inst.class_sizes), end(inst.class_sizes), 0U) !=
      end(inst.class_sizes)) {
    throw contract_error{"empty variable class"};
  }
  check_literals(inst.phi, inst.class_sizes);
}

bool eval_mcpsat(mcpsat_instance const& inst,
                 std::vector<std::size_t> const& choice) {
  if (choice.size() != inst.class_count()) {
    throw contract_error{"choice must name one variable per class"};
  }
  for (auto i = std::size_t{0}; i != choice.size(); ++i) {
    if (choice[i] >= inst.class_sizes[i]) {
      throw contract_error{fmt::format("choice for class {} out of range", i + 1)};
    }
  }
  check_literals(inst.phi, inst.class_sizes);
  return eval(inst.phi, choice);
}

std::optional<std::vector<std::size_t>> solve_mcpsat(mcpsat_instance const& inst) {
  validate(inst);
  auto choice = std::vector<std::size_t>(inst.class_count(), 0);
  while (true) {
    if (eval(inst.phi, choice)) {
      return choice;
    }
    auto i = std::size_t{0};
    for (; i != choice.size(); ++i) {
      if (++choice[i] < inst.class_sizes[i]) {
        break;
      }
      choice[i] = 0;
    }
    if (i == choice.size()) {
      return std::nullopt;
    }
  }
}

void validate(cnf_instance const& cnf) {
  for (auto k = std::size_t{0}; k != cnf.clauses.size(); ++k) {
    auto const& c = cnf.clauses[k];
    if (c.empty()) {
      throw contract_error{fmt::format("clause {} is empty", k + 1)};
    }
    for (auto const l : c) {
      auto const v = l < 0 ? -l : l;
      if (v == 0 || static_cast<std::size_t>(v) > cnf.variable_count) {
        throw contract_error{
            fmt::format("clause {} uses undeclared variable {}", k + 1, l)};
      }
    }
  }
}

std::optional<std::vector<bool>> solve_cnf(cnf_instance const& cnf) {
  validate(cnf);
  if (cnf.variable_count >= 40) {
    throw budget_exceeded{"too many variables for exhaustive CNF search"};
  }
  auto const n = cnf.variable_count;
  for (auto mask = std::uint64_t{0}; mask != (std::uint64_t{1} << n); ++mask) {
    auto const value = [&](std::int64_t l) {
      auto const v = static_cast<std::size_t>(l < 0 ? -l : l) - 1;
      auto const set = ((mask >> v) & 1U) != 0;
      return l < 0 ? !set : set;
    };
    auto const sat = std::all_of(begin(cnf.clauses), end(cnf.clauses),
                                 [&](std::vector<std::int64_t> const& c) {
                                   return std::any_of(begin(c), end(c), value);
                                 });
    if (sat) {
      auto out = std::vector<bool>(n);
      for (auto v = std::size_t{0}; v != n; ++v) {
        out[v] = ((mask >> v) & 1U) != 0;
      }
      return out;
    }
  }
  return std::nullopt;
}

mcpsat_instance threesat_to_mcpsat(cnf_instance const& cnf) {
  validate(cnf);
  auto inst = mcpsat_instance{};
  inst.class_sizes.assign(cnf.variable_count, 2);
  auto clauses = std::vector<formula>{};
  for (auto const& c : cnf.clauses) {
    auto lits = std::vector<formula>{};
    for (auto const l : c) {
      auto const v = static_cast<std::size_t>(l < 0 ? -l : l) - 1;
      lits.push_back(formula::literal(v, l < 0 ? 1 : 0));
    }
    clauses.push_back(formula::any_of(std::move(lits)));
  }
  inst.phi = formula::all_of(std::move(clauses));
  return inst;
}

void validate(multicolored_graph const& g) {
  if (g.class_sizes.size() < 2) {
    throw contract_error{"multicolored clique needs at least two classes"};
  }
  for (auto const& [p, q] : g.edges) {
    if (p.first >= g.class_sizes.size() || q.first >= g.class_sizes.size() ||
        p.second >= g.class_sizes[p.first] ||
        q.second >= g.class_sizes[q.first]) {
      throw contract_error{"edge endpoint out of range"};
    }
    if (p.first == q.first) {
      throw contract_error{"edge inside a color class"};
    }
  }
}

bool has_multicolored_clique(multicolored_graph const& g) {
  validate(g);
  auto adj = std::set<std::pair<std::pair<std::size_t, std::size_t>,
                                std::pair<std::size_t, std::size_t>>>{};
  for (auto const& [p, q] : g.edges) {
    adj.insert({p, q});
    adj.insert({q, p});
  }
  auto const k = g.class_sizes.size();
  auto pick = std::vector<std::size_t>(k, 0);
  auto rec = [&](auto&& self, std::size_t const i) -> bool {
    if (i == k) {
      return true;
    }
    for (pick[i] = 0; pick[i] != g.class_sizes[i]; ++pick[i]) {
      auto ok = true;
      for (auto j = std::size_t{0}; j != i && ok; ++j) {
        ok = adj.contains({{j, pick[j]}, {i, pick[i]}});
      }
      if (ok && self(self, i + 1)) {
        return true;
      }
    }
    return false;
  };
  return rec(rec, 0);
}

mcpsat_instance mcc_to_mcpsat(multicolored_graph const& g) {
  validate(g);
  auto inst = mcpsat_instance{};
  inst.class_sizes = g.class_sizes;
  auto const k = g.class_sizes.size();
  auto pairs = std::vector<formula>{};
  for (auto i = std::size_t{0}; i != k; ++i) {
    for (auto j = i + 1; j != k; ++j) {
      auto options = std::vector<formula>{};
      for (auto [p, q] : g.edges) {
        if (p.first > q.first) {
          std::swap(p, q);
        }
        if (p.first == i && q.first == j) {
          options.push_back(formula::all_of(
              {formula::literal(i, p.second), formula::literal(j, q.second)}));
        }
      }
      pairs.push_back(formula::any_of(std::move(options)));
    }
  }
  inst.phi = formula::all_of(std::move(pairs));
  return inst;
}

formula normalize(formula const& f) {
  if (f.type == formula::kind::lit) {
    return f;
  }
  auto const conj = f.type == formula::kind::all;
  auto kept = std::vector<formula>{};
  for (auto const& c : f.children) {
    auto n = normalize(c);
    // Absorbing constant: false in a conjunction, true in a disjunction.
    if (conj ? is_false(n) : is_true(n)) {
      return n;
    }
    if (conj ? is_true(n) : is_false(n)) {
      continue;
    }
    if (n.type == f.type) {
      for (auto& g : n.children) {
        kept.push_back(std::move(g));
      }
    } else {
      kept.push_back(std::move(n));
    }
  }
  if (kept.size() == 1) {
    return std::move(kept.front());
  }
  return formula{f.type, std::move(kept), 0, 0};
}

namespace {

class gadget_builder {
public:
  gadget_builder(std::size_t n, std::size_t m) : n_{n}, m_{m} {}

  vertex_id vertex(std::string name) {
    auto const id = static_cast<vertex_id>(names_.size());
    names_.push_back(std::move(name));
    return id;
  }

  void place(vertex_id v) { layout_.push_back(v); }

  // Arcs at the given times plus one dummy per time step in [lo, hi] that is
  // outside [skip_lo, skip_hi].
  void connect(vertex_id u, vertex_id v, std::vector<std::int64_t> const& times,
               std::int64_t lo, std::int64_t hi, std::int64_t skip_lo,
               std::int64_t skip_hi) {
    for (auto const t : times) {
      arcs_.push_back({u, v, t, 0});
    }
    for (auto t = lo; t <= hi; ++t) {
      if (t < skip_lo || t > skip_hi) {
        arcs_.push_back({u, v, t, 0});
      }
    }
  }

  // Literal-style arcs: window times of class i, dummies everywhere else.
  void window_connect(vertex_id u, vertex_id v, std::size_t i, std::size_t a) {
    auto const lo = offset(i, m_);
    auto const hi = offset(i + 1, m_);
    auto const ia = static_cast<std::int64_t>(a);
    connect(u, v, {lo + ia, hi - ia}, 1, offset(n_ + 1, m_) - 1, lo, hi - 1);
  }

  std::vector<std::vector<vertex_id>> validation(formula const& f, vertex_id v,
                                                 vertex_id w) {
    auto layers = std::vector<std::vector<vertex_id>>{};
    switch (f.type) {
      case formula::kind::lit: {
        auto const i = f.cls + 1;
        auto const a = f.var + 1;
        auto const l1 = vertex(fmt::format("l_{{{},{}}}^(1)#{}", i, a, literal_no_));
        auto const l2 = vertex(fmt::format("l_{{{},{}}}^(2)#{}", i, a, literal_no_));
        ++literal_no_;
        window_connect(v, l1, i, a);
        window_connect(l1, l2, i, a);
        window_connect(l2, w, i, a);
        layers.push_back({l1});
        layers.push_back({l2});
        break;
      }
      case formula::kind::all: {
        auto from = v;
        for (auto k = std::size_t{0}; k != f.children.size(); ++k) {
          auto const last = k + 1 == f.children.size();
          auto const to = last ? w : vertex(fmt::format("c#{}", connector_no_++));
          auto sub = validation(f.children[k], from, to);
          layers.insert(end(layers), begin(sub), end(sub));
          if (!last) {
            layers.push_back({to});
          }
          from = to;
        }
        break;
      }
      case formula::kind::any: {
        // Interleave parallel branches level by level.
        for (auto const& c : f.children) {
          auto sub = validation(c, v, w);
          if (layers.size() < sub.size()) {
            layers.resize(sub.size());
          }
          for (auto k = std::size_t{0}; k != sub.size(); ++k) {
            layers[k].insert(end(layers[k]), begin(sub[k]), end(sub[k]));
          }
        }
        break;
      }
    }
    return layers;
  }

  gadget_instance finish(vertex_id s, vertex_id z, std::size_t x) {
    auto out = gadget_instance{};
    out.drp.graph = temporal_graph{names_.size(), std::move(arcs_)};
    out.drp.s = s;
    out.drp.z = z;
    out.drp.x = x;
    out.drp.delta = 1;
    out.layout = std::move(layout_);
    out.provenance = std::move(names_);
    return out;
  }

private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::string> names_;
  std::vector<vertex_id> layout_;
  std::vector<time_arc> arcs_;
  std::size_t literal_no_{1};
  std::size_t connector_no_{1};
};

}  // namespace

gadget_instance mcpsat_to_drp(mcpsat_instance const& inst,
                              selection_dummies const dummies) {
  validate(inst);
  auto const n = inst.class_count();
  if (n == 0) {
    throw contract_error{"MCP-SAT instance needs at least one class"};
  }
  auto const m = inst.max_class_size();
  auto b = gadget_builder{n, m};

  // Selection gadgets s_1 .. s_{n+1}.
  auto s = std::vector<vertex_id>{b.vertex("s_1")};
  for (auto i = std::size_t{1}; i <= n; ++i) {
    auto const o_i = offset(i, m);
    auto const o_next = offset(i + 1, m);
    b.place(s.back());
    auto const size = inst.class_sizes[i - 1];
    auto first = std::vector<vertex_id>{};
    auto second = std::vector<vertex_id>{};
    for (auto a = std::size_t{1}; a <= size; ++a) {
      first.push_back(b.vertex(fmt::format("x_{{{},{}}}^(1)", i, a)));
    }
    for (auto a = std::size_t{1}; a <= size; ++a) {
      second.push_back(b.vertex(fmt::format("x_{{{},{}}}^(2)", i, a)));
    }
    s.push_back(b.vertex(fmt::format("s_{}", i + 1)));
    auto const dummy_hi =
        dummies == selection_dummies::before_window ? o_i - 1 : o_next - 1;
    for (auto a = std::size_t{1}; a <= size; ++a) {
      auto const ia = static_cast<std::int64_t>(a);
      auto const u = s[i - 1];
      auto const x1 = first[a - 1];
      auto const x2 = second[a - 1];
      // Nothing is skipped: dummies cover all of [1, dummy_hi].
      b.connect(u, x1, {o_i + ia}, 1, dummy_hi, 1, 0);
      b.connect(x1, x2, {o_i + ia, o_next - ia}, 1, dummy_hi, 1, 0);
      b.connect(x2, s[i], {o_i + ia, o_next - ia, o_next}, 1, dummy_hi, 1, 0);
    }
    for (auto const v : first) {
      b.place(v);
    }
    for (auto const v : second) {
      b.place(v);
    }
  }
  b.place(s.back());

  // Validation gadget from s_{n+1} to f_1.
  auto const phi = normalize(inst.phi);
  auto f = std::vector<vertex_id>{};
  if (phi.type == formula::kind::all && phi.children.empty()) {
    f.push_back(s.back());  // true: nothing to validate
  } else {
    f.push_back(b.vertex("f_1"));
    for (auto const& layer : b.validation(phi, s.back(), f.front())) {
      for (auto const v : layer) {
        b.place(v);
      }
    }
    b.place(f.front());
  }

  // Finalization gadgets f_1 .. f_n.
  for (auto i = std::size_t{2}; i <= n; ++i) {
    auto const size = inst.class_sizes[i - 1];
    auto first = std::vector<vertex_id>{};
    auto second = std::vector<vertex_id>{};
    for (auto a = std::size_t{1}; a <= size; ++a) {
      first.push_back(b.vertex(fmt::format("f_{{{},{}}}^(1)", i, a)));
    }
    for (auto a = std::size_t{1}; a <= size; ++a) {
      second.push_back(b.vertex(fmt::format("f_{{{},{}}}^(2)", i, a)));
    }
    f.push_back(b.vertex(fmt::format("f_{}", i)));
    for (auto a = std::size_t{1}; a <= size; ++a) {
      b.window_connect(f[i - 2], first[a - 1], i, a);
      b.window_connect(first[a - 1], second[a - 1], i, a);
      b.window_connect(second[a - 1], f[i - 1], i, a);
    }
    for (auto const v : first) {
      b.place(v);
    }
    for (auto const v : second) {
      b.place(v);
    }
    b.place(f.back());
  }

  return b.finish(s.front(), f.back(), 2 * n - 1);
}

std::size_t layout_stretch(static_graph const& g,
                           std::vector<vertex_id> const& order) {
  auto const n = g.vertex_count();
  if (order.size() != n) {
    throw contract_error{"layout is not a permutation"};
  }
  auto pos = std::vector<std::size_t>(n, n);
  for (auto i = std::size_t{0}; i != n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) {
      throw contract_error{"layout is not a permutation"};
    }
    pos[order[i]] = i;
  }
  auto stretch = std::size_t{0};
  for (auto const& [u, v] : g.edges()) {
    auto const d = pos[u] > pos[v] ? pos[u] - pos[v] : pos[v] - pos[u];
    stretch = std::max(stretch, d);
  }
  return stretch;
}

std::size_t layout_stretch(gadget_instance const& inst) {
  return layout_stretch(underlying_graph(inst.drp.graph), inst.layout);
}

bool verify_layout(gadget_instance const& inst, std::size_t const bound) {
  return layout_stretch(inst) <= bound;
}

}  // namespace drp::reductions
