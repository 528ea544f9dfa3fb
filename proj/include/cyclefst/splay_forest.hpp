#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cyclefst/types.hpp"

namespace cyclefst {

// Per-element splay node. |size| is the number of nodes in the subtree; a
// negative size marks the subtree as pending reversal (read right to left).
struct NodeRecord {
  Element parent = kNil;
  Element left = kNil;
  Element right = kNil;
  std::int32_t size = 0;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct Instrumentation {
  std::uint64_t rotations = 0;
  std::uint64_t splays = 0;
  // Fixes that actually resolved a pending reversal.
  std::uint64_t fixes = 0;
  // Sum over unbounded splays of log2(size of the splayed tree).
  double log_work = 0.0;
};

// A forest of splay trees over the elements 1..n, stored in a flat arena
// indexed by element. Trees are implicit sequences: the in-order traversal
// (with pending reversals resolved) is the represented sequence, and no keys
// are stored.
//
// Every descent fixes each visited node before reading its children, and
// every splay step fixes grandparent, parent, then the splayed node. Roots
// may carry a pending reversal between operations.
class SplayForest {
 public:
  SplayForest() = default;

  // n singleton trees.
  explicit SplayForest(std::size_t n);

  std::size_t size() const { return nodes_.size() - 1; }

  const NodeRecord& node(Element v) const { return nodes_[v]; }
  Element parent(Element v) const { return nodes_[v].parent; }
  Element left(Element v) const { return nodes_[v].left; }
  Element right(Element v) const { return nodes_[v].right; }
  std::int32_t signed_size(Element v) const { return nodes_[v].size; }
  std::int32_t subtree_size(Element v) const {
    const std::int32_t s = nodes_[v].size;
    return s < 0 ? -s : s;
  }
  bool is_root(Element v) const { return nodes_[v].parent == kNil; }

  // Links the given detached singletons into a perfectly balanced tree whose
  // in-order is `sequence`. The root of every subtree is the upper middle
  // element of its range. Returns the root (kNil for an empty sequence).
  Element build_balanced(std::span<const Element> sequence);

  // Resolves a pending reversal at v: negates its size, swaps its children
  // and toggles the children's signs. No-op for kNil or non-negative size.
  void fix(Element v);

  // Single rotation of the edge between x and its parent. x, its parent and
  // grandparent must already be fixed. Throws ContractViolation if x is a
  // root.
  void rotate_edge(Element x);

  // Moves x to the root of its tree.
  void splay(Element x);

  // Splays x until its parent is `stop`; stop must be a proper ancestor of x
  // (or kNil, which is a plain splay).
  void splay_below(Element x, Element stop);

  // Splays x and detaches its right subtree. Returns {x, former right child}.
  std::pair<Element, Element> split_after(Element x);

  // Appends tree2 after tree1: splays the in-order maximum of tree1 and
  // hangs tree2 as its right child. Returns the new root.
  Element join(Element root1, Element root2);

  // l-th node (1-based) of the in-order of v's subtree.
  Element select(Element v, std::int64_t rank);

  Element leftmost(Element v);
  Element rightmost(Element v);

  void toggle_reverse(Element v) {
    if (v != kNil) nodes_[v].size = -nodes_[v].size;
  }

  // Sign-resolved in-order of the tree rooted at `root`. Does not modify
  // the forest.
  std::vector<Element> in_order(Element root) const;

  // Walks parent links without splaying.
  Element find_root(Element v) const;

  // Sum of log2|size(v)| over all nodes.
  double potential() const;

  const Instrumentation& instrumentation() const { return stats_; }

  // Throws ContractViolation describing the first broken size or link
  // invariant. O(n).
  void check_invariants() const;

  // Direct node access for white-box tests.
  NodeRecord& raw(Element v) { return nodes_[v]; }

 private:
  void replace_child(Element parent, Element old_child, Element new_child);
  Element build_range(std::span<const Element> seq, Element parent);

  // Index 0 is the NIL sentinel and always reads as an empty subtree.
  std::vector<NodeRecord> nodes_{NodeRecord{}};
  Instrumentation stats_;
};

}  // namespace cyclefst
