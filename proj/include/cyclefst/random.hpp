#pragma once

#include <cstdint>
#include <random>

#include "cyclefst/types.hpp"

namespace cyclefst {

// Seeded generator with a platform-independent output sequence: the
// standard mt19937_64 engine (whose output is fixed by the C++ standard)
// plus rejection sampling for bounded integers. std::uniform_int_distribution
// is avoided because its mapping differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Uniform permutation of 1..n (Fisher-Yates).
Permutation random_permutation(std::size_t n, Rng& rng);

// Uniform cyclic permutation of 1..n, i.e. a single n-cycle (Sattolo).
Permutation random_cyclic_permutation(std::size_t n, Rng& rng);

}  // namespace cyclefst
