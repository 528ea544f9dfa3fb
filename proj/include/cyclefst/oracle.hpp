#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "cyclefst/types.hpp"

namespace cyclefst {

// Reference permutation stored only in one-line notation. Every cycle query
// walks the cycle; nothing is cached. Same contracts and error taxonomy as
// FstPermutation.
class OneLineOracle {
 public:
  explicit OneLineOracle(std::span<const Element> one_line);

  std::size_t size() const { return forward_.size(); }

  Element apply(Element i) const;
  Element inverse(Element j) const;
  Element power(Element i, std::int64_t k) const;
  std::size_t num_cycles() const;
  std::size_t cycle_size(Element i) const;
  bool same_cycle(Element i, Element j) const;
  Distance distance(Element i, Element j) const;
  void transpose_at(Element i, Element j);
  void transpose_values(Element i, Element j);
  void flip(Element i, Element j);
  Permutation to_one_line() const { return forward_; }

 private:
  void check_element(Element v) const;
  Element& image(Element v) { return forward_[v - 1]; }
  Element image(Element v) const { return forward_[v - 1]; }

  Permutation forward_;
};

// One-line notation of pi and of pi^{-1}, kept consistent on every update.
class OneLinePlusInverseOracle {
 public:
  explicit OneLinePlusInverseOracle(std::span<const Element> one_line);

  std::size_t size() const { return forward_.size(); }

  Element apply(Element i) const;
  Element inverse(Element j) const;
  Element power(Element i, std::int64_t k) const;
  std::size_t num_cycles() const;
  std::size_t cycle_size(Element i) const;
  bool same_cycle(Element i, Element j) const;
  Distance distance(Element i, Element j) const;
  void transpose_at(Element i, Element j);
  void transpose_values(Element i, Element j);
  void flip(Element i, Element j);
  Permutation to_one_line() const { return forward_; }
  const Permutation& inverse_one_line() const { return backward_; }

 private:
  void check_element(Element v) const;
  void set_image(Element v, Element image);

  Permutation forward_;
  Permutation backward_;
};

}  // namespace cyclefst
