#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treeramsey {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Raised for malformed tree input or node references outside a tree.
class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 0 - 1 = 0; every other k - 1 as usual.
constexpr unsigned saturating_dec(unsigned k) noexcept { return k == 0 ? 0 : k - 1; }

/// A finite rooted tree with an ordering of each node's immediate successors.
///
/// Nodes are numbered depth-first with siblings visited in order, so the
/// lexicographic order of the tree coincides with index order and the
/// subtree of `v` is the index range `[v, subtree_end(v))`. Heights follow
/// the convention ht(root) = 1. Values are immutable once constructed.
class OrderedTree {
 public:
  OrderedTree() = default;

  /// Builds a tree from a parent array (`-1` for the root slot). Throws
  /// TreeError unless parent[i] < i and the numbering is depth-first.
  static OrderedTree from_parents(std::span<const std::int64_t> parents);

  std::size_t size() const noexcept { return parent_.size(); }
  bool empty() const noexcept { return parent_.empty(); }
  NodeId root() const;

  NodeId parent(NodeId v) const { return parent_.at(v); }
  std::span<const NodeId> children(NodeId v) const { return children_.at(v); }
  /// Position of `v` among its siblings (0 for the root).
  std::size_t sibling_rank(NodeId v) const { return sibling_rank_.at(v); }
  unsigned height(NodeId v) const { return height_.at(v); }
  NodeId subtree_end(NodeId v) const { return end_.at(v); }
  bool is_leaf(NodeId v) const { return children_.at(v).empty(); }

  /// ht(T); 0 for the empty tree.
  unsigned height() const noexcept { return max_height_; }
  /// br(T); 0 for the empty tree and for a single node.
  std::size_t branching() const noexcept { return branching_; }
  std::vector<NodeId> leaves() const;
  std::size_t leaf_count() const;

  /// True when `a` is a predecessor of `b` (every node is its own predecessor).
  bool is_predecessor(NodeId a, NodeId b) const { return a <= b && b < subtree_end(a); }
  bool contains(NodeId v) const noexcept { return v < size(); }

  /// Parent array with -1 at the root, as accepted by from_parents.
  std::vector<std::int64_t> parent_array() const;

  friend bool operator==(const OrderedTree& a, const OrderedTree& b) { return a.parent_ == b.parent_; }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::size_t> sibling_rank_;
  std::vector<unsigned> height_;
  std::vector<NodeId> end_;
  unsigned max_height_ = 0;
  std::size_t branching_ = 0;
};

/// The chain [n] = T^{1,n}.
OrderedTree chain(unsigned n);

/// T^{k,n}: empty for n = 0, one node for n = 1 or k = 0, otherwise every
/// non-leaf has k ordered children and every leaf has height n.
OrderedTree regular_tree(unsigned k, unsigned n);

/// Child-position path from the root to `v` (empty for the root).
std::vector<std::uint32_t> path_of(const OrderedTree& t, NodeId v);
/// Inverse of path_of; kNoNode when the path leaves the tree.
NodeId node_at(const OrderedTree& t, std::span<const std::uint32_t> path);

/// Deepest common predecessor of v and w.
NodeId wedge(const OrderedTree& t, NodeId v, NodeId w);

/// The lexicographic order computed from its definition (predecessor
/// relation, then the sibling order below the meet), not from indices.
std::strong_ordering lex_compare(const OrderedTree& t, NodeId v, NodeId w);

/// A tree induced on a predecessor-closed node subset, with its inclusion.
struct InducedTree {
  OrderedTree tree;
  std::vector<NodeId> to_parent;  ///< node of `tree` -> node of the source
};

/// Induces the ordered tree on `keep` (sorted, closed under predecessors).
InducedTree induce(const OrderedTree& t, std::span<const NodeId> keep);

/// T*: every node below the maximal height.
OrderedTree derive_star(const OrderedTree& t);
InducedTree derive_star_with_map(const OrderedTree& t);

struct DerivePrimeResult {
  OrderedTree derived;                 ///< T'
  std::vector<NodeId> kept;            ///< node of T' -> node of T
  std::vector<NodeId> removed;         ///< T \ T' by increasing height, i.e. [p]
  std::optional<NodeId> splitting;     ///< node of T' with a successor in T \ T'

  std::size_t removed_length() const noexcept { return removed.size(); }
};

/// T': drops the final segment of the rightmost branch that carries no leaf
/// other than the rightmost leaf.
DerivePrimeResult derive_prime(const OrderedTree& t);

/// T(v) together with its inclusion into T.
InducedTree subtree(const OrderedTree& t, NodeId v);

enum class PlusMinus { Plus, Minus };
/// Plus adds one child on top of every leaf; Minus removes every leaf.
OrderedTree plus_minus(const OrderedTree& t, PlusMinus variant);

/// Balanced-parenthesis code; equal iff the trees are isomorphic as ordered trees.
std::string canonical_code(const OrderedTree& t);
OrderedTree tree_from_code(std::string_view code);

/// Every ordered tree with exactly `size` nodes, in increasing code order.
std::vector<OrderedTree> all_ordered_trees(std::size_t size);

}  // namespace treeramsey
