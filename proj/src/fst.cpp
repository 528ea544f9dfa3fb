#include "cyclefst/fst.hpp"

#include <vector>

#include "cyclefst/errors.hpp"
#include "cyclefst/permutation.hpp"

namespace cyclefst {

FstPermutation::FstPermutation(std::span<const Element> one_line)
    : forest_(one_line.size()) {
  // Validation rides along the cycle walk: the input is a permutation iff
  // every value is in range and every walk closes at its own start.
  const std::size_t n = one_line.size();
  std::vector<bool> marked(n + 1, false);
  std::vector<Element> cycle;
  cycle.reserve(n);
  for (Element start = 1; start <= n; ++start) {
    if (marked[start]) continue;
    cycle.clear();
    for (Element v = start;;) {
      marked[v] = true;
      cycle.push_back(v);
      const Element next = one_line[v - 1];
      if (next == start) break;
      if (next < 1 || next > n || marked[next]) {
        validate_permutation(one_line);  // throws with the offending position
        throw ContractViolation("permutation check disagrees with cycle walk");
      }
      v = next;
    }
    forest_.build_balanced(cycle);
    ++cycles_;
  }
}

void FstPermutation::check_element(Element v) const {
  if (v < 1 || v > size()) throw OutOfRangeError(v, size());
}

Element FstPermutation::apply(Element i) {
  check_element(i);
  forest_.splay(i);
  const Element r = forest_.right(i);
  // The maximum wraps around to the first element of the cycle.
  const Element next = r == kNil ? forest_.leftmost(i) : forest_.leftmost(r);
  forest_.splay(next);
  return next;
}

Element FstPermutation::inverse(Element j) {
  check_element(j);
  forest_.splay(j);
  const Element l = forest_.left(j);
  const Element prev = l == kNil ? forest_.rightmost(j) : forest_.rightmost(l);
  forest_.splay(prev);
  return prev;
}

Element FstPermutation::power(Element i, std::int64_t k) {
  check_element(i);
  forest_.splay(i);
  const std::int64_t len = forest_.subtree_size(i);
  const std::int64_t steps = ((k % len) + len) % len;
  if (steps == 0) return i;
  const Element r = forest_.right(i);
  const std::int64_t after = forest_.subtree_size(r);
  const Element target = steps <= after ? forest_.select(r, steps)
                                        : forest_.select(i, steps - after);
  forest_.splay(target);
  return target;
}

bool FstPermutation::same_cycle(Element i, Element j) {
  check_element(i);
  check_element(j);
  if (i == j) return true;
  forest_.splay(i);
  forest_.splay(j);
  return !forest_.is_root(i);
}

Distance FstPermutation::distance(Element i, Element j) {
  check_element(i);
  check_element(j);
  if (i == j) return Distance(0);
  if (!same_cycle(i, j)) return Distance::infinite();
  rotate_cycle(j);
  forest_.splay(i);
  return Distance(static_cast<std::uint64_t>(
      forest_.subtree_size(forest_.right(i))));
}

std::size_t FstPermutation::cycle_size(Element i) {
  check_element(i);
  forest_.splay(i);
  return static_cast<std::size_t>(forest_.subtree_size(i));
}

Element FstPermutation::rotate_cycle(Element i) {
  check_element(i);
  // (A, i, B) -> (B, A, i): split after i, then append the left part.
  auto [head, tail] = forest_.split_after(i);
  if (tail == kNil) return head;
  return forest_.join(tail, head);
}

void FstPermutation::transpose_at(Element i, Element j) {
  check_element(i);
  check_element(j);
  if (i == j) {
    throw ArgumentError("transposition needs two distinct elements, got " +
                        std::to_string(i) + " twice");
  }
  if (same_cycle(i, j)) {
    // C = (A, j, B, i) splits into (A, j) and (B, i).
    rotate_cycle(i);
    forest_.split_after(j);
    ++cycles_;
  } else {
    // (A, i, B) and (D, j, E) merge into (B, A, i, E, D, j).
    const Element first = rotate_cycle(i);
    const Element second = rotate_cycle(j);
    forest_.join(first, second);
    --cycles_;
  }
}

void FstPermutation::transpose_values(Element i, Element j) {
  check_element(i);
  check_element(j);
  if (i == j) {
    throw ArgumentError("transposition needs two distinct elements, got " +
                        std::to_string(i) + " twice");
  }
  const Element pre_i = inverse(i);
  const Element pre_j = inverse(j);
  transpose_at(pre_i, pre_j);
}

void FstPermutation::flip(Element i, Element j) {
  check_element(i);
  check_element(j);
  if (i == j) return;
  if (!same_cycle(i, j)) {
    throw DomainError("flip endpoints " + std::to_string(i) + " and " +
                      std::to_string(j) + " lie on different cycles");
  }
  const Element after = apply(j);
  if (after == i) {
    // The segment is the whole cycle.
    forest_.splay(i);
    forest_.toggle_reverse(i);
    return;
  }
  const Element before = inverse(i);
  rotate_cycle(after);
  forest_.splay(after);
  if (before == after) {
    // Everything except `after`, which is now the last element.
    forest_.toggle_reverse(forest_.left(after));
    return;
  }
  // before is the root and after its right child; the segment strictly
  // between them is after's left subtree.
  forest_.splay(before);
  forest_.splay_below(after, before);
  forest_.toggle_reverse(forest_.left(after));
}

Permutation FstPermutation::to_one_line() const {
  const std::size_t n = size();
  Permutation out(n);
  for (Element v = 1; v <= n; ++v) {
    if (!forest_.is_root(v)) continue;
    const std::vector<Element> cycle = forest_.in_order(v);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      out[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return out;
}

}  // namespace cyclefst
