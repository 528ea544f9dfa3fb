#include "cyclefst/oracle.hpp"

#include <string>
#include <vector>

#include "cyclefst/errors.hpp"
#include "cyclefst/permutation.hpp"

namespace cyclefst {

namespace {

void check_distinct(Element i, Element j) {
  if (i == j) {
    throw ArgumentError("transposition needs two distinct elements, got " +
                        std::to_string(i) + " twice");
  }
}

[[noreturn]] void throw_cross_cycle_flip(Element i, Element j) {
  throw DomainError("flip endpoints " + std::to_string(i) + " and " +
                    std::to_string(j) + " lie on different cycles");
}

std::size_t walk_cycle_length(const Permutation& forward, Element i) {
  std::size_t len = 1;
  for (Element v = forward[i - 1]; v != i; v = forward[v - 1]) ++len;
  return len;
}

Distance walk_distance(const Permutation& forward, Element i, Element j) {
  std::uint64_t d = 0;
  Element v = i;
  do {
    if (v == j) return Distance(d);
    v = forward[v - 1];
    ++d;
  } while (v != i);
  return Distance::infinite();
}

// Segment i, pi(i), ..., j. Caller guarantees j is on i's cycle.
std::vector<Element> collect_segment(const Permutation& forward, Element i,
                                     Element j) {
  std::vector<Element> seg{i};
  for (Element v = i; v != j;) {
    v = forward[v - 1];
    seg.push_back(v);
  }
  return seg;
}

// New images after reversing `seg` inside its cycle; `before` and `after`
// are the cycle neighbours of the segment (unused for a whole cycle).
template <typename SetImage>
void rewrite_reversed(const std::vector<Element>& seg, bool whole_cycle,
                      Element before, Element after, SetImage set_image) {
  const std::size_t k = seg.size();
  for (std::size_t m = 1; m < k; ++m) set_image(seg[m], seg[m - 1]);
  if (whole_cycle) {
    set_image(seg[0], seg[k - 1]);
  } else {
    set_image(before, seg[k - 1]);
    set_image(seg[0], after);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// OneLineOracle

OneLineOracle::OneLineOracle(std::span<const Element> one_line)
    : forward_(one_line.begin(), one_line.end()) {
  validate_permutation(forward_);
}

void OneLineOracle::check_element(Element v) const {
  if (v < 1 || v > size()) throw OutOfRangeError(v, size());
}

Element OneLineOracle::apply(Element i) const {
  check_element(i);
  return image(i);
}

Element OneLineOracle::inverse(Element j) const {
  check_element(j);
  Element v = j;
  while (image(v) != j) v = image(v);
  return v;
}

Element OneLineOracle::power(Element i, std::int64_t k) const {
  check_element(i);
  const auto len = static_cast<std::int64_t>(walk_cycle_length(forward_, i));
  std::int64_t steps = ((k % len) + len) % len;
  Element v = i;
  for (; steps > 0; --steps) v = image(v);
  return v;
}

std::size_t OneLineOracle::num_cycles() const { return count_cycles(forward_); }

std::size_t OneLineOracle::cycle_size(Element i) const {
  check_element(i);
  return walk_cycle_length(forward_, i);
}

bool OneLineOracle::same_cycle(Element i, Element j) const {
  check_element(i);
  check_element(j);
  return !walk_distance(forward_, i, j).is_infinite();
}

Distance OneLineOracle::distance(Element i, Element j) const {
  check_element(i);
  check_element(j);
  return walk_distance(forward_, i, j);
}

void OneLineOracle::transpose_at(Element i, Element j) {
  check_element(i);
  check_element(j);
  check_distinct(i, j);
  std::swap(image(i), image(j));
}

void OneLineOracle::transpose_values(Element i, Element j) {
  check_element(i);
  check_element(j);
  check_distinct(i, j);
  const Element pre_i = inverse(i);
  const Element pre_j = inverse(j);
  std::swap(image(pre_i), image(pre_j));
}

void OneLineOracle::flip(Element i, Element j) {
  check_element(i);
  check_element(j);
  if (i == j) return;
  if (!same_cycle(i, j)) throw_cross_cycle_flip(i, j);
  const std::vector<Element> seg = collect_segment(forward_, i, j);
  const Element after = image(j);
  const Element before = inverse(i);
  rewrite_reversed(seg, after == i, before, after,
                   [this](Element v, Element w) { image(v) = w; });
}

// ---------------------------------------------------------------------------
// OneLinePlusInverseOracle

OneLinePlusInverseOracle::OneLinePlusInverseOracle(
    std::span<const Element> one_line)
    : forward_(one_line.begin(), one_line.end()) {
  validate_permutation(forward_);
  backward_ = invert(forward_);
}

void OneLinePlusInverseOracle::check_element(Element v) const {
  if (v < 1 || v > size()) throw OutOfRangeError(v, size());
}

void OneLinePlusInverseOracle::set_image(Element v, Element image) {
  forward_[v - 1] = image;
  backward_[image - 1] = v;
}

Element OneLinePlusInverseOracle::apply(Element i) const {
  check_element(i);
  return forward_[i - 1];
}

Element OneLinePlusInverseOracle::inverse(Element j) const {
  check_element(j);
  return backward_[j - 1];
}

Element OneLinePlusInverseOracle::power(Element i, std::int64_t k) const {
  check_element(i);
  const auto len = static_cast<std::int64_t>(walk_cycle_length(forward_, i));
  std::int64_t steps = k % len;
  Element v = i;
  // Walk whichever direction the sign of the reduced exponent asks for.
  for (; steps > 0; --steps) v = forward_[v - 1];
  for (; steps < 0; ++steps) v = backward_[v - 1];
  return v;
}

std::size_t OneLinePlusInverseOracle::num_cycles() const {
  return count_cycles(forward_);
}

std::size_t OneLinePlusInverseOracle::cycle_size(Element i) const {
  check_element(i);
  return walk_cycle_length(forward_, i);
}

bool OneLinePlusInverseOracle::same_cycle(Element i, Element j) const {
  check_element(i);
  check_element(j);
  return !walk_distance(forward_, i, j).is_infinite();
}

Distance OneLinePlusInverseOracle::distance(Element i, Element j) const {
  check_element(i);
  check_element(j);
  return walk_distance(forward_, i, j);
}

void OneLinePlusInverseOracle::transpose_at(Element i, Element j) {
  check_element(i);
  check_element(j);
  check_distinct(i, j);
  const Element pi = forward_[i - 1];
  const Element pj = forward_[j - 1];
  set_image(i, pj);
  set_image(j, pi);
}

void OneLinePlusInverseOracle::transpose_values(Element i, Element j) {
  check_element(i);
  check_element(j);
  check_distinct(i, j);
  const Element pre_i = backward_[i - 1];
  const Element pre_j = backward_[j - 1];
  set_image(pre_i, j);
  set_image(pre_j, i);
}

void OneLinePlusInverseOracle::flip(Element i, Element j) {
  check_element(i);
  check_element(j);
  if (i == j) return;
  if (!same_cycle(i, j)) throw_cross_cycle_flip(i, j);
  const std::vector<Element> seg = collect_segment(forward_, i, j);
  const Element after = forward_[j - 1];
  const Element before = backward_[i - 1];
  rewrite_reversed(seg, after == i, before, after,
                   [this](Element v, Element w) { set_image(v, w); });
}

}  // namespace cyclefst
