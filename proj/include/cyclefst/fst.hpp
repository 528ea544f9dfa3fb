#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "cyclefst/splay_forest.hpp"
#include "cyclefst/types.hpp"

namespace cyclefst {

// Forest of splay trees: a dynamic permutation stored as one splay tree per
// cycle. The in-order of each tree, with pending reversals resolved, is some
// rotation of the cycle, so pi(i) is the cyclic in-order successor of i.
//
// All queries splay, so every member except num_cycles(), size() and
// to_one_line() mutates the internal shape. A permutation object must not
// be shared between threads without external locking.
class FstPermutation {
 public:
  FstPermutation() = default;

  // Builds one perfectly balanced tree per cycle in O(n). Throws
  // ValidationError if `one_line` is not a permutation of 1..n.
  explicit FstPermutation(std::span<const Element> one_line);

  std::size_t size() const { return forest_.size(); }

  Element apply(Element i);
  Element inverse(Element j);

  // pi^k(i) for any signed k.
  Element power(Element i, std::int64_t k);

  std::size_t num_cycles() const { return cycles_; }
  bool same_cycle(Element i, Element j);

  // min{d >= 0 : pi^d(i) = j}, or infinity across cycles.
  Distance distance(Element i, Element j);

  std::size_t cycle_size(Element i);

  // Re-linearizes i's tree so that i comes last. The permutation is
  // unchanged. Returns the new root.
  Element rotate_cycle(Element i);

  // pi <- (pi(i), pi(j)) . pi. Splits the shared cycle or merges two.
  void transpose_at(Element i, Element j);

  // pi <- (i, j) . pi.
  void transpose_values(Element i, Element j);

  // Reverses the cycle segment running forward from i to j. Throws
  // DomainError if i and j lie on different cycles.
  void flip(Element i, Element j);

  Permutation to_one_line() const;

  const SplayForest& forest() const { return forest_; }
  const Instrumentation& instrumentation() const {
    return forest_.instrumentation();
  }
  double potential() const { return forest_.potential(); }

 private:
  void check_element(Element v) const;

  SplayForest forest_;
  std::size_t cycles_ = 0;
};

}  // namespace cyclefst
