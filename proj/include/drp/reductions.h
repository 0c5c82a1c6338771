#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drp/instance.h"

namespace drp::reductions {

// Monotone formula over class-indexed variables. Indices are 0-based; the
// generated gadgets use time offsets with 1-based variable numbers.
struct formula {
  enum class kind { all, any, lit };

  kind type{kind::all};
  std::vector<formula> children;
  std::size_t cls{0};
  std::size_t var{0};

  static formula all_of(std::vector<formula> c) { return {kind::all, std::move(c), 0, 0}; }
  static formula any_of(std::vector<formula> c) { return {kind::any, std::move(c), 0, 0}; }
  static formula literal(std::size_t i, std::size_t a) { return {kind::lit, {}, i, a}; }

  std::size_t literal_count() const;
  friend bool operator==(formula const&, formula const&) = default;
};

std::string to_string(formula const&);

struct mcpsat_instance {
  std::vector<std::size_t> class_sizes;  // |X_1| .. |X_n|
  formula phi;

  std::size_t class_count() const { return class_sizes.size(); }
  std::size_t max_class_size() const;
};

// Throws contract_error for an empty class or a literal outside its class.
void validate(mcpsat_instance const&);

// choice[i] is the variable of class i set to true.
bool eval_mcpsat(mcpsat_instance const&, std::vector<std::size_t> const& choice);

// Exhaustive search over all choices; a satisfying one if any.
std::optional<std::vector<std::size_t>> solve_mcpsat(mcpsat_instance const&);

// Literal +v / -v over variables 1..n (DIMACS convention).
struct cnf_instance {
  std::size_t variable_count{0};
  std::vector<std::vector<std::int64_t>> clauses;
};

void validate(cnf_instance const&);
std::optional<std::vector<bool>> solve_cnf(cnf_instance const&);

// X_i = {x_i, not x_i} as variables 0 and 1 of class i - 1.
mcpsat_instance threesat_to_mcpsat(cnf_instance const&);

struct multicolored_graph {
  std::vector<std::size_t> class_sizes;  // |V_1| .. |V_k|
  // ((i, a), (j, b)): vertex a of class i adjacent to vertex b of class j.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>,
                        std::pair<std::size_t, std::size_t>>>
      edges;
};

void validate(multicolored_graph const&);
bool has_multicolored_clique(multicolored_graph const&);
mcpsat_instance mcc_to_mcpsat(multicolored_graph const&);

// Constant-free equivalent: either all_of({}) (true), any_of({}) (false), or
// a formula without empty connectives, single-child connectives or nested
// connectives of the same kind.
formula normalize(formula const&);

// Time window of the selection gadget's dummy arcs for class i (1-based).
// `before_window` puts them on [o_i - 1] as the correctness proof needs;
// `through_window` puts them on [o_{i+1} - 1] as the construction text
// reads, which lets dummies shadow the gadget's own arcs.
enum class selection_dummies { before_window, through_window };

struct gadget_instance {
  drp_instance drp;
  std::vector<vertex_id> layout;        // permutation of all vertices
  std::vector<std::string> provenance;  // role label per vertex id
};

gadget_instance mcpsat_to_drp(mcpsat_instance const&,
                              selection_dummies = selection_dummies::before_window);

// Every underlying edge joins vertices at most `bound` layout positions apart.
bool verify_layout(gadget_instance const&, std::size_t bound);
std::size_t layout_stretch(gadget_instance const&);

// Largest stretch of `order` over the edges of g; contract_error if `order`
// is not a permutation of g's vertices.
std::size_t layout_stretch(static_graph const& g, std::vector<vertex_id> const& order);

// Offset o_i for 1-based class i and maximum class size m.
constexpr std::int64_t offset(std::size_t i, std::size_t m) {
  return static_cast<std::int64_t>((2 * m + 1) * (i - 1));
}

}  // namespace drp::reductions
