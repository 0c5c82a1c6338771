#include "drp/generate.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fmt/core.h"

namespace drp::gen {

std::map<std::string, std::int64_t> parse_spec(
    std::string_view spec, std::initializer_list<std::string_view> allowed) {
  auto out = std::map<std::string, std::int64_t>{};
  auto normalized = std::string{spec};
  std::replace(begin(normalized), end(normalized), ',', ' ');
  auto pos = std::size_t{0};
  while (pos < normalized.size()) {
    auto const start = normalized.find_first_not_of(' ', pos);
    if (start == std::string::npos) {
      break;
    }
    auto const stop = std::min(normalized.find(' ', start), normalized.size());
    auto const item = normalized.substr(start, stop - start);
    pos = stop;
    auto const eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument{fmt::format("expected key=value, got '{}'", item)};
    }
    auto const key = item.substr(0, eq);
    if (std::find(begin(allowed), end(allowed), key) == end(allowed)) {
      throw std::invalid_argument{fmt::format("unknown key '{}'", key)};
    }
    auto const value = item.substr(eq + 1);
    try {
      auto used = std::size_t{0};
      auto const v = std::stoll(value, &used);
      if (used != value.size()) {
        throw std::invalid_argument{""};
      }
      out[key] = v;
    } catch (std::logic_error const&) {
      throw std::invalid_argument{
          fmt::format("value of '{}' is not an integer: '{}'", key, value)};
    }
  }
  return out;
}

random_params parse_random_params(std::string_view spec) {
  auto const kv = parse_spec(spec, {"n", "arcs", "tmax", "lambda", "x", "delta", "seed"});
  auto p = random_params{};
  auto const get = [&](char const* key, auto& field) {
    if (auto const it = kv.find(key); it != end(kv)) {
      if (it->second < 0) {
        throw std::invalid_argument{fmt::format("'{}' must be non-negative", key)};
      }
      field = static_cast<std::remove_reference_t<decltype(field)>>(it->second);
    }
  };
  get("n", p.n);
  get("arcs", p.arcs);
  get("tmax", p.tmax);
  get("lambda", p.lambda);
  get("x", p.x);
  get("delta", p.delta);
  get("seed", p.seed);
  if (p.n < 2 && p.arcs > 0) {
    throw std::invalid_argument{"arcs need at least two vertices"};
  }
  if (p.n == 0) {
    throw std::invalid_argument{"n must be positive"};
  }
  return p;
}

drp_instance random_instance(random_params const& p) {
  auto rng = std::mt19937_64{p.seed};
  auto vertex = std::uniform_int_distribution<vertex_id>{
      0, static_cast<vertex_id>(p.n - 1)};
  auto time = std::uniform_int_distribution<std::int64_t>{0, p.tmax};
  auto lambda = std::uniform_int_distribution<std::int64_t>{0, p.lambda};
  auto arcs = std::vector<time_arc>{};
  arcs.reserve(p.arcs);
  while (arcs.size() != p.arcs) {
    auto const u = vertex(rng);
    auto const v = vertex(rng);
    if (u == v) {
      continue;
    }
    auto const t = time(rng);
    arcs.push_back({u, v, t, lambda(rng)});
  }
  auto inst = drp_instance{};
  inst.graph = build_graph(p.n, std::move(arcs));
  inst.s = 0;
  inst.z = static_cast<vertex_id>(p.n - 1);
  inst.x = p.x;
  inst.delta = p.delta;
  return inst;
}

}  // namespace drp::gen
