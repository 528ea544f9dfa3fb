#include "cyclefst/permutation.hpp"

#include <string>

#include "cyclefst/errors.hpp"

namespace cyclefst {

void validate_permutation(std::span<const Element> one_line) {
  const std::size_t n = one_line.size();
  std::vector<std::size_t> seen_at(n + 1, 0);
  for (std::size_t pos = 1; pos <= n; ++pos) {
    const Element v = one_line[pos - 1];
    if (v < 1 || v > n) {
      throw ValidationError(pos, "position " + std::to_string(pos) +
                                     ": value " + std::to_string(v) +
                                     " outside 1.." + std::to_string(n));
    }
    if (seen_at[v] != 0) {
      throw ValidationError(pos, "position " + std::to_string(pos) +
                                     ": value " + std::to_string(v) +
                                     " already used at position " +
                                     std::to_string(seen_at[v]));
    }
    seen_at[v] = pos;
  }
}

std::vector<std::vector<Element>> cycle_decomposition(
    std::span<const Element> one_line) {
  const std::size_t n = one_line.size();
  std::vector<bool> marked(n + 1, false);
  std::vector<std::vector<Element>> cycles;
  for (Element start = 1; start <= n; ++start) {
    if (marked[start]) continue;
    auto& cycle = cycles.emplace_back();
    for (Element v = start; !marked[v]; v = one_line[v - 1]) {
      marked[v] = true;
      cycle.push_back(v);
    }
  }
  return cycles;
}

std::size_t count_cycles(std::span<const Element> one_line) {
  const std::size_t n = one_line.size();
  std::vector<bool> marked(n + 1, false);
  std::size_t count = 0;
  for (Element start = 1; start <= n; ++start) {
    if (marked[start]) continue;
    ++count;
    for (Element v = start; !marked[v]; v = one_line[v - 1]) marked[v] = true;
  }
  return count;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Element>(i + 1);
  return p;
}

Permutation invert(std::span<const Element> one_line) {
  Permutation inv(one_line.size());
  for (std::size_t i = 0; i < one_line.size(); ++i) {
    inv[one_line[i] - 1] = static_cast<Element>(i + 1);
  }
  return inv;
}

Permutation from_cycles(std::size_t n,
                        const std::vector<std::vector<Element>>& cycles) {
  Permutation p = identity_permutation(n);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  validate_permutation(p);
  return p;
}

}  // namespace cyclefst
