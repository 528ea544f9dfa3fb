#include "cyclefst/splay_forest.hpp"

#include <cmath>
#include <string>

#include "cyclefst/errors.hpp"

namespace cyclefst {

namespace {

std::int32_t magnitude(std::int32_t s) { return s < 0 ? -s : s; }

}  // namespace

SplayForest::SplayForest(std::size_t n) : nodes_(n + 1) {
  for (std::size_t v = 1; v <= n; ++v) nodes_[v].size = 1;
}

Element SplayForest::build_balanced(std::span<const Element> sequence) {
  if (sequence.empty()) return kNil;
  return build_range(sequence, kNil);
}

Element SplayForest::build_range(std::span<const Element> seq, Element parent) {
  if (seq.empty()) return kNil;
  const std::size_t mid = seq.size() / 2;
  const Element root = seq[mid];
  NodeRecord& rec = nodes_[root];
  rec.parent = parent;
  rec.size = static_cast<std::int32_t>(seq.size());
  rec.left = build_range(seq.first(mid), root);
  rec.right = build_range(seq.subspan(mid + 1), root);
  return root;
}

void SplayForest::fix(Element v) {
  if (v == kNil) return;
  NodeRecord& rec = nodes_[v];
  if (rec.size >= 0) return;
  rec.size = -rec.size;
  std::swap(rec.left, rec.right);
  if (rec.left != kNil) nodes_[rec.left].size = -nodes_[rec.left].size;
  if (rec.right != kNil) nodes_[rec.right].size = -nodes_[rec.right].size;
  ++stats_.fixes;
}

void SplayForest::replace_child(Element parent, Element old_child,
                                Element new_child) {
  if (parent == kNil) return;
  NodeRecord& p = nodes_[parent];
  if (p.left == old_child) {
    p.left = new_child;
  } else {
    p.right = new_child;
  }
}

void SplayForest::rotate_edge(Element x) {
  NodeRecord& xr = nodes_[x];
  const Element p = xr.parent;
  if (p == kNil) {
    throw ContractViolation("rotate_edge: element " + std::to_string(x) +
                            " is a root");
  }
  NodeRecord& pr = nodes_[p];
  const Element g = pr.parent;

  // Names: e = |p| before, d = |x| before, b =
  // the subtree that changes sides. After rotation |x| = e, |p| = e - d + b.
  const std::int32_t e = pr.size;
  const std::int32_t d = xr.size;
  Element moved;
  if (pr.left == x) {
    moved = xr.right;
    pr.left = moved;
    xr.right = p;
  } else {
    moved = xr.left;
    pr.right = moved;
    xr.left = p;
  }
  if (moved != kNil) nodes_[moved].parent = p;
  const std::int32_t b = magnitude(nodes_[moved].size);

  pr.parent = x;
  xr.parent = g;
  replace_child(g, p, x);

  xr.size = e;
  pr.size = e - d + b;
  ++stats_.rotations;
}

void SplayForest::splay_below(Element x, Element stop) {
  if (x == kNil) return;
  for (;;) {
    const Element p = nodes_[x].parent;
    if (p == stop) break;
    if (p == kNil) {
      throw ContractViolation("splay_below: stop node is not an ancestor");
    }
    const Element g = nodes_[p].parent;
    if (g == stop) {
      fix(p);
      fix(x);
      rotate_edge(x);  // zig
      break;
    }
    fix(g);
    fix(p);
    fix(x);
    const bool x_is_left = nodes_[p].left == x;
    const bool p_is_left = nodes_[g].left == p;
    if (x_is_left == p_is_left) {
      rotate_edge(p);  // zig-zig
      rotate_edge(x);
    } else {
      rotate_edge(x);  // zig-zag
      rotate_edge(x);
    }
  }
  fix(x);
  ++stats_.splays;
}

void SplayForest::splay(Element x) {
  splay_below(x, kNil);
  stats_.log_work += std::log2(static_cast<double>(subtree_size(x)));
}

std::pair<Element, Element> SplayForest::split_after(Element x) {
  splay(x);
  NodeRecord& xr = nodes_[x];
  const Element r = xr.right;
  if (r != kNil) {
    xr.right = kNil;
    nodes_[r].parent = kNil;
    xr.size -= magnitude(nodes_[r].size);
  }
  return {x, r};
}

Element SplayForest::join(Element root1, Element root2) {
  if (root1 == kNil || nodes_[root1].parent != kNil) {
    throw ContractViolation("join: first argument is not a root");
  }
  if (root2 == kNil) return root1;
  if (nodes_[root2].parent != kNil) {
    throw ContractViolation("join: second argument is not a root");
  }
  if (root1 == root2) {
    throw ContractViolation("join: both arguments are the same tree");
  }
  const Element m = rightmost(root1);
  splay(m);
  NodeRecord& mr = nodes_[m];
  mr.right = root2;
  nodes_[root2].parent = m;
  mr.size += magnitude(nodes_[root2].size);
  return m;
}

Element SplayForest::select(Element v, std::int64_t rank) {
  if (rank < 1 || rank > subtree_size(v)) {
    throw ContractViolation("select: rank " + std::to_string(rank) +
                            " outside subtree of size " +
                            std::to_string(subtree_size(v)));
  }
  for (;;) {
    fix(v);
    const std::int64_t here = subtree_size(nodes_[v].left) + 1;
    if (rank == here) return v;
    if (rank < here) {
      v = nodes_[v].left;
    } else {
      rank -= here;
      v = nodes_[v].right;
    }
  }
}

Element SplayForest::leftmost(Element v) {
  fix(v);
  while (nodes_[v].left != kNil) {
    v = nodes_[v].left;
    fix(v);
  }
  return v;
}

Element SplayForest::rightmost(Element v) {
  fix(v);
  while (nodes_[v].right != kNil) {
    v = nodes_[v].right;
    fix(v);
  }
  return v;
}

std::vector<Element> SplayForest::in_order(Element root) const {
  std::vector<Element> out;
  if (root == kNil) return out;
  out.reserve(static_cast<std::size_t>(subtree_size(root)));

  // Each frame is a node plus the reversal parity inherited from its
  // ancestors; `expanded` frames emit their node when popped.
  struct Frame {
    Element v;
    bool reversed;
    bool expanded;
  };
  std::vector<Frame> stack{{root, false, false}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.expanded) {
      out.push_back(f.v);
      continue;
    }
    const NodeRecord& rec = nodes_[f.v];
    const bool rev = f.reversed != (rec.size < 0);
    const Element first = rev ? rec.right : rec.left;
    const Element second = rev ? rec.left : rec.right;
    if (second != kNil) stack.push_back({second, rev, false});
    stack.push_back({f.v, rev, true});
    if (first != kNil) stack.push_back({first, rev, false});
  }
  return out;
}

Element SplayForest::find_root(Element v) const {
  while (nodes_[v].parent != kNil) v = nodes_[v].parent;
  return v;
}

double SplayForest::potential() const {
  double phi = 0.0;
  for (std::size_t v = 1; v < nodes_.size(); ++v) {
    phi += std::log2(static_cast<double>(magnitude(nodes_[v].size)));
  }
  return phi;
}

void SplayForest::check_invariants() const {
  const auto fail = [](Element v, const std::string& what) {
    throw ContractViolation("node " + std::to_string(v) + ": " + what);
  };
  if (nodes_[kNil].size != 0) fail(kNil, "NIL sentinel has nonzero size");
  const std::size_t n = size();
  for (Element v = 1; v <= n; ++v) {
    const NodeRecord& rec = nodes_[v];
    if (rec.size == 0) fail(v, "zero size");
    if (rec.left > n || rec.right > n || rec.parent > n) {
      fail(v, "link outside arena");
    }
    if (rec.left != kNil && rec.left == rec.right) fail(v, "duplicate child");
    if (magnitude(rec.size) != 1 + magnitude(nodes_[rec.left].size) +
                                   magnitude(nodes_[rec.right].size)) {
      fail(v, "subtree size mismatch");
    }
    if (rec.left != kNil && nodes_[rec.left].parent != v) {
      fail(v, "left child does not point back");
    }
    if (rec.right != kNil && nodes_[rec.right].parent != v) {
      fail(v, "right child does not point back");
    }
    if (rec.parent != kNil) {
      const NodeRecord& p = nodes_[rec.parent];
      if (p.left != v && p.right != v) fail(v, "parent does not list child");
    }
  }
  // Consistent sizes and two-way links rule out cycles in the parent graph:
  // every node would have to be strictly larger than itself.
}

}  // namespace cyclefst
