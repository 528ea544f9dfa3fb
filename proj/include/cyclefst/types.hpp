#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace cyclefst {

// Elements are 1..n. Zero is reserved as the NIL node id.
using Element = std::uint32_t;
inline constexpr Element kNil = 0;

// One-line notation: entry k-1 holds pi(k).
using Permutation = std::vector<Element>;

// Result of a cycle-distance query: a step count, or infinity when the two
// elements lie on different cycles.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint64_t steps) : value_(steps) {}

  static constexpr Distance infinite() { return Distance(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr std::uint64_t value() const { return value_; }

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  static constexpr std::uint64_t kInfinite =
      std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

}  // namespace cyclefst
