#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace drp {

using duration = std::int64_t;

// Largest finite label we accept. Leaves headroom so that t + lambda + delta
// sums over a handful of terms cannot wrap before the checked add sees them.
constexpr std::int64_t kMaxFiniteTime = std::int64_t{1} << 60;

// Time value extended with +infinity. Infinity is absorbing for addition and
// is the top element of the order.
class ext_time {
public:
  constexpr ext_time() = default;
  constexpr explicit ext_time(std::int64_t v) : value_{v} {
    if (v < 0 || v > kMaxFiniteTime) {
      throw std::overflow_error{"time value out of range: " +
                                std::to_string(v)};
    }
  }

  static constexpr ext_time inf() {
    ext_time t;
    t.value_ = kInfRaw;
    return t;
  }

  constexpr bool is_inf() const { return value_ == kInfRaw; }
  constexpr bool is_finite() const { return value_ != kInfRaw; }

  constexpr std::int64_t value() const {
    if (is_inf()) {
      throw std::logic_error{"value() called on infinite time"};
    }
    return value_;
  }

  friend constexpr ext_time operator+(ext_time a, duration d) {
    if (a.is_inf()) {
      return a;
    }
    if (d < 0) {
      throw std::logic_error{"negative duration"};
    }
    if (d > kMaxFiniteTime - a.value_) {
      throw std::overflow_error{"time overflow"};
    }
    return ext_time{a.value_ + d};
  }

  friend constexpr auto operator<=>(ext_time, ext_time) = default;
  friend constexpr bool operator==(ext_time, ext_time) = default;

  friend std::ostream& operator<<(std::ostream& out, ext_time t) {
    if (t.is_inf()) {
      return out << "inf";
    }
    return out << t.value_;
  }

private:
  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_{0};
};

inline std::string to_string(ext_time t) {
  return t.is_inf() ? std::string{"inf"} : std::to_string(t.value());
}

}  // namespace drp
