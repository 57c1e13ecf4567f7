#include "treeramsey/tree.hpp"

#include <algorithm>
#include <functional>

namespace treeramsey {

OrderedTree OrderedTree::from_parents(std::span<const std::int64_t> parents) {
  OrderedTree t;
  const std::size_t n = parents.size();
  if (n == 0) return t;
  if (n >= kNoNode) throw TreeError("tree too large");
  if (parents[0] != -1) throw TreeError("node 0 must be the root (parent -1)");
  t.parent_.assign(n, kNoNode);
  t.children_.assign(n, {});
  t.sibling_rank_.assign(n, 0);
  t.height_.assign(n, 1);
  t.end_.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const std::int64_t p = parents[i];
    if (p < 0 || static_cast<std::size_t>(p) >= i)
      throw TreeError("parent of node " + std::to_string(i) + " must be an earlier node");
    // depth-first numbering: p must lie on the path from the root to i-1
    NodeId a = static_cast<NodeId>(i - 1);
    while (a != kNoNode && a != static_cast<NodeId>(p)) a = t.parent_[a];
    if (a == kNoNode)
      throw TreeError("node " + std::to_string(i) + " breaks depth-first numbering");
    const auto pv = static_cast<NodeId>(p);
    t.parent_[i] = pv;
    t.sibling_rank_[i] = t.children_[pv].size();
    t.children_[pv].push_back(static_cast<NodeId>(i));
    t.height_[i] = t.height_[pv] + 1;
  }
  for (std::size_t i = n; i-- > 0;) {
    NodeId e = static_cast<NodeId>(i + 1);
    if (!t.children_[i].empty()) e = t.end_[t.children_[i].back()];
    t.end_[i] = e;
    t.branching_ = std::max(t.branching_, t.children_[i].size());
    t.max_height_ = std::max(t.max_height_, t.height_[i]);
  }
  return t;
}

NodeId OrderedTree::root() const {
  if (empty()) throw TreeError("empty tree has no root");
  return 0;
}

std::vector<NodeId> OrderedTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < size(); ++v)
    if (children_[v].empty()) out.push_back(v);
  return out;
}

std::size_t OrderedTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(children_.begin(), children_.end(), [](const auto& c) { return c.empty(); }));
}

std::vector<std::int64_t> OrderedTree::parent_array() const {
  std::vector<std::int64_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = i == 0 ? -1 : static_cast<std::int64_t>(parent_[i]);
  return out;
}

OrderedTree chain(unsigned n) { return regular_tree(1, n); }

OrderedTree regular_tree(unsigned k, unsigned n) {
  std::vector<std::int64_t> parents;
  if (n == 0) return {};
  if (k == 0) n = 1;
  std::function<void(std::int64_t, unsigned)> grow = [&](std::int64_t p, unsigned h) {
    const auto me = static_cast<std::int64_t>(parents.size());
    parents.push_back(p);
    if (h == n) return;
    for (unsigned c = 0; c < k; ++c) grow(me, h + 1);
  };
  grow(-1, 1);
  return OrderedTree::from_parents(parents);
}

std::vector<std::uint32_t> path_of(const OrderedTree& t, NodeId v) {
  if (!t.contains(v)) throw TreeError("node out of range");
  std::vector<std::uint32_t> path;
  while (v != 0) {
    path.push_back(static_cast<std::uint32_t>(t.sibling_rank(v)));
    v = t.parent(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

NodeId node_at(const OrderedTree& t, std::span<const std::uint32_t> path) {
  if (t.empty()) return kNoNode;
  NodeId v = 0;
  for (auto c : path) {
    auto kids = t.children(v);
    if (c >= kids.size()) return kNoNode;
    v = kids[c];
  }
  return v;
}

NodeId wedge(const OrderedTree& t, NodeId v, NodeId w) {
  if (!t.contains(v) || !t.contains(w)) throw TreeError("node out of range");
  while (t.height(v) > t.height(w)) v = t.parent(v);
  while (t.height(w) > t.height(v)) w = t.parent(w);
  while (v != w) {
    v = t.parent(v);
    w = t.parent(w);
  }
  return v;
}

std::strong_ordering lex_compare(const OrderedTree& t, NodeId v, NodeId w) {
  if (v == w) return std::strong_ordering::equal;
  const NodeId m = wedge(t, v, w);
  if (m == v) return std::strong_ordering::less;
  if (m == w) return std::strong_ordering::greater;
  auto below = [&](NodeId x) {
    while (t.parent(x) != m) x = t.parent(x);
    return x;
  };
  return t.sibling_rank(below(v)) <=> t.sibling_rank(below(w));
}

InducedTree induce(const OrderedTree& t, std::span<const NodeId> keep) {
  InducedTree out;
  if (keep.empty()) return out;
  std::vector<NodeId> local(t.size(), kNoNode);
  std::vector<std::int64_t> parents;
  parents.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const NodeId v = keep[i];
    if (!t.contains(v)) throw TreeError("node out of range");
    if (i > 0 && keep[i - 1] >= v) throw TreeError("induced node set must be sorted");
    local[v] = static_cast<NodeId>(i);
    if (i == 0) {
      parents.push_back(-1);
      continue;
    }
    const NodeId p = t.parent(v);
    if (v == 0 || local[p] == kNoNode) throw TreeError("induced node set is not predecessor-closed");
    parents.push_back(local[p]);
  }
  if (keep[0] != 0 && t.parent(keep[0]) != kNoNode) {
    // rooted at an inner node: only valid when every other kept node lies below it
    for (auto v : keep)
      if (!t.is_predecessor(keep[0], v)) throw TreeError("induced node set is not a tree");
  }
  out.tree = OrderedTree::from_parents(parents);
  out.to_parent.assign(keep.begin(), keep.end());
  return out;
}

InducedTree derive_star_with_map(const OrderedTree& t) {
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < t.size(); ++v)
    if (t.height(v) < t.height()) keep.push_back(v);
  return induce(t, keep);
}

OrderedTree derive_star(const OrderedTree& t) { return derive_star_with_map(t).tree; }

DerivePrimeResult derive_prime(const OrderedTree& t) {
  DerivePrimeResult r;
  if (t.empty()) return r;
  // walk up from the last leaf while the current node is an only child
  NodeId x = static_cast<NodeId>(t.size() - 1);
  std::vector<NodeId> removed{x};
  NodeId v = x;
  while (v != 0 && t.children(t.parent(v)).size() == 1) {
    v = t.parent(v);
    removed.push_back(v);
  }
  std::reverse(removed.begin(), removed.end());
  r.removed = removed;
  std::vector<NodeId> keep;
  for (NodeId u = 0; u < removed.front(); ++u) keep.push_back(u);
  auto induced = induce(t, keep);
  r.derived = std::move(induced.tree);
  r.kept = std::move(induced.to_parent);
  if (removed.front() != 0) r.splitting = t.parent(removed.front());
  return r;
}

InducedTree subtree(const OrderedTree& t, NodeId v) {
  if (!t.contains(v)) throw TreeError("node out of range");
  std::vector<NodeId> keep;
  for (NodeId u = v; u < t.subtree_end(v); ++u) keep.push_back(u);
  std::vector<std::int64_t> parents;
  for (auto u : keep) parents.push_back(u == v ? -1 : static_cast<std::int64_t>(t.parent(u) - v));
  return {OrderedTree::from_parents(parents), keep};
}

OrderedTree plus_minus(const OrderedTree& t, PlusMinus variant) {
  std::vector<std::int64_t> parents;
  std::vector<NodeId> local(t.size(), kNoNode);
  for (NodeId v = 0; v < t.size(); ++v) {
    if (variant == PlusMinus::Minus && t.is_leaf(v)) continue;
    local[v] = static_cast<NodeId>(parents.size());
    parents.push_back(v == 0 ? -1 : static_cast<std::int64_t>(local[t.parent(v)]));
    if (variant == PlusMinus::Plus && t.is_leaf(v)) parents.push_back(local[v]);
  }
  return OrderedTree::from_parents(parents);
}

std::string canonical_code(const OrderedTree& t) {
  std::string code;
  code.reserve(2 * t.size());
  std::vector<NodeId> open;
  for (NodeId v = 0; v < t.size(); ++v) {
    while (!open.empty() && !t.is_predecessor(open.back(), v)) {
      code.push_back(')');
      open.pop_back();
    }
    code.push_back('(');
    open.push_back(v);
  }
  code.append(open.size(), ')');
  return code;
}

OrderedTree tree_from_code(std::string_view code) {
  std::vector<std::int64_t> parents;
  std::vector<std::int64_t> stack;
  bool closed_root = false;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const char c = code[i];
    const auto at = " at position " + std::to_string(i);
    if (c == '(') {
      if (closed_root) throw TreeError("code describes more than one tree" + at);
      parents.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<std::int64_t>(parents.size() - 1));
    } else if (c == ')') {
      if (stack.empty()) throw TreeError("unbalanced tree code" + at);
      stack.pop_back();
      if (stack.empty()) closed_root = true;
    } else {
      throw TreeError(std::string("unexpected character '") + c + "' in tree code" + at);
    }
  }
  if (!stack.empty()) throw TreeError("unbalanced tree code: " + std::to_string(stack.size()) + " unclosed at end");
  return OrderedTree::from_parents(parents);
}

std::vector<OrderedTree> all_ordered_trees(std::size_t size) {
  std::vector<OrderedTree> out;
  if (size == 0) {
    out.emplace_back();
    return out;
  }
  // inner codes of the root are Dyck words of length 2(size-1)
  const std::size_t half = size - 1;
  std::string word;
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t open, std::size_t close) {
    if (open == half && close == half) {
      out.push_back(tree_from_code("(" + word + ")"));
      return;
    }
    if (open < half) {
      word.push_back('(');
      gen(open + 1, close);
      word.pop_back();
    }
    if (close < open) {
      word.push_back(')');
      gen(open, close + 1);
      word.pop_back();
    }
  };
  gen(0, 0);
  return out;
}

}  // namespace treeramsey
