#include "cyclefst/random.hpp"

#include <limits>
#include <utility>

#include "cyclefst/permutation.hpp"

namespace cyclefst {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  const std::uint64_t offset =
      span == std::numeric_limits<std::uint64_t>::max() ? engine_()
                                                        : below(span + 1);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset);
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  Permutation p = identity_permutation(n);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(p[i - 1], p[rng.below(i)]);
  }
  return p;
}

Permutation random_cyclic_permutation(std::size_t n, Rng& rng) {
  Permutation p = identity_permutation(n);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(p[i - 1], p[rng.below(i - 1)]);
  }
  return p;
}

}  // namespace cyclefst
