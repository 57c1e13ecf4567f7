#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "treeramsey/embedding.hpp"
#include "treeramsey/framework.hpp"

namespace treeramsey {

/// A node of T^inf seen from the window U = T^{k,N}, where T^n sits in U as the
/// subtree of v_n (path 0^{N-n}). Nodes of U keep their index; the root v_{N+j}
/// of T^{N+j} gets -j, so v_i always has index N - i and <=^inf is integer order.
using ExtNode = std::int64_t;

/// An element of B: the empty function, or a leaf preserving embedding
/// g: T_x -> T^inf given by its values on U nodes 0..x and by
/// g(v_{N+j}) = v_{N+j+shift} above the window.
struct BranchMap {
  bool empty = false;
  NodeId x = 0;
  std::int64_t shift = 0;
  std::vector<ExtNode> values;
  friend auto operator<=>(const BranchMap&, const BranchMap&) = default;
};

/// A leaf preserving embedding S -> T^inf; `shape` is the canonical code of S.
struct BranchPlacement {
  std::string shape;
  std::vector<ExtNode> image;
  friend auto operator<=>(const BranchPlacement&, const BranchPlacement&) = default;
};

/// The window U = T^{k,N} of T^inf under the inclusions T^n in T^{n+1} as the first subtree.
class BranchUniverse {
 public:
  BranchUniverse() = default;
  BranchUniverse(unsigned k, unsigned window);

  unsigned k() const { return k_; }
  unsigned window() const { return window_; }
  const OrderedTree& tree() const { return *tree_; }
  const OrderedTree& level_tree(unsigned n) const { return levels_.at(n); }

  /// Index of v_n.
  ExtNode root_of(unsigned n) const { return static_cast<ExtNode>(window_) - n; }
  /// x_n, the rightmost leaf of T^n.
  NodeId last_leaf(unsigned n) const;
  /// Node of T^n (n <= N) -> U node.
  NodeId lift(unsigned n, NodeId v) const { return static_cast<NodeId>(window_ - n + v); }
  /// U node -> node of T^n, kNoNode outside T^n.
  NodeId lower(unsigned n, ExtNode e) const;
  /// Least n with the node in T^n.
  unsigned min_level(ExtNode e) const;
  bool is_leaf(ExtNode e) const { return e >= 0 && tree_->is_leaf(static_cast<NodeId>(e)); }

  std::string node_label(ExtNode e) const;

 private:
  unsigned k_ = 0;
  unsigned window_ = 0;
  std::shared_ptr<const OrderedTree> tree_ = std::make_shared<const OrderedTree>();
  std::vector<OrderedTree> levels_;
  std::vector<unsigned> leading_zeros_;
};

/// The element of binomsq(T^n, T^m)^inf whose restriction to T^m is `core`
/// (given on T^m and T^n node indices).
BranchMap branch_element(const BranchUniverse& u, unsigned m, unsigned n, const std::vector<NodeId>& core);

/// A = B (empty function and leaf preserving embeddings of T_x), X = Y (leaf
/// preserving embeddings of trees), acting by composition, truncated by
/// restriction to S', normed by the largest image point (-inf for S empty).
class BranchBackground {
 public:
  using AElem = BranchMap;
  using XElem = BranchPlacement;

  /// Samples the family elements of every binomsq(T^n,T^m)^inf with n <= N, their
  /// pairwise products, and every leaf preserving embedding into U of trees with
  /// at most `max_shape` nodes.
  BranchBackground(unsigned k, unsigned window, unsigned max_shape, bool build_samples = true);

  const std::vector<BranchMap>& a_sample() const { return a_sample_; }
  const std::vector<BranchPlacement>& x_sample() const { return x_sample_; }
  std::optional<BranchMap> mult(const BranchMap& a, const BranchMap& b) const;
  std::optional<BranchPlacement> act(const BranchMap& a, const BranchPlacement& x) const;
  BranchPlacement trunc(const BranchPlacement& x) const;
  NormValue norm(const BranchPlacement& x) const;
  std::string label_a(const BranchMap& a) const;
  std::string label_x(const BranchPlacement& x) const;
  /// b restricted to the domain of a equals a.
  bool extends(const BranchMap& b, const BranchMap& a) const;

  const BranchUniverse& universe() const { return u_; }
  BranchPlacement lift_placement(const OrderedTree& s, unsigned n, const std::vector<NodeId>& image) const;

 private:
  ExtNode apply(const BranchMap& a, ExtNode e) const;
  const DerivePrimeResult& shape_prime(const std::string& code) const;

  BranchUniverse u_;
  std::vector<BranchMap> a_sample_;
  std::vector<BranchPlacement> x_sample_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::unique_ptr<DerivePrimeResult>> primes_;
};

/// The common domain of a non-empty set of Y elements; throws on mixed domains.
OrderedTree based_on(const std::vector<BranchPlacement>& q);

/// Least m with every image inside T^m (0 when Q = {empty function}).
unsigned min_level(const BranchUniverse& u, const std::vector<BranchPlacement>& q);

/// G = binomsq(T^n,T^m)^inf, Q = finite sets based on one tree; G.Q defined when
/// m is the least level holding the images of Q. G families with n < N are
/// premises, n = N is the witness margin. The listed Q sample holds every
/// lp(S, T^n) and a singleton from each; a listed Q is a premise when every
/// premise G acting on dQ has its (B) witness inside the window.
class BranchPair {
 public:
  using Background = BranchBackground;
  using AElem = BranchMap;
  using XElem = BranchPlacement;

  BranchPair(unsigned k, unsigned window, unsigned max_shape = 4);

  const BranchBackground& background() const { return bg_; }
  const std::vector<Family<BranchMap>>& f_families() const { return f_; }
  const std::vector<Family<BranchPlacement>>& p_families() const { return q_; }
  std::optional<Family<BranchPlacement>> dot(const Family<BranchMap>& f, const Family<BranchPlacement>& q) const;
  std::optional<Family<BranchMap>> bullet(const Family<BranchMap>& f, const Family<BranchMap>& g) const;
  /// Every non-empty set based on one tree is a member of the family.
  std::optional<Family<BranchPlacement>> recognize(const std::vector<BranchPlacement>& xs) const;

  Family<BranchMap> g_family(unsigned n, unsigned m) const;
  /// All leaf preserving embeddings S -> T^n.
  Family<BranchPlacement> lp_family(const OrderedTree& s, unsigned n) const;

 private:
  BranchBackground bg_;
  std::vector<Family<BranchMap>> f_;
  std::vector<Family<BranchPlacement>> q_;
};

/// E: nodes of T^q that are immediate successors of a predecessor of x and lie after x.
std::vector<NodeId> successors_after(const OrderedTree& tq, NodeId x);

struct BranchPReport {
  Verdict verdict;
  unsigned q = 0;
  unsigned r = 0;
  bool reader_case = false;
  json attempts = json::array();
};

/// Condition (P) in the BRANCH instance for Q and f0 in dQ, with
/// F = binomsq(T^r,T^q)^inf. g0 is the identity on the non-leaves of T_x in T^q
/// (T^q placed in T^r along the same paths), sends each leaf to the leftmost leaf
/// above its copy, and shifts the root chain by r - q. Each r = q, ..., max_r is
/// decided directly on F_{g0}.Q_{f0} and on the reduced problem inside T^r(w0).
/// When S' is empty, g0 is the empty function (the reader case).
BranchPReport check_P_branch_instance(const BranchUniverse& u, const std::vector<BranchPlacement>& q,
                                      const BranchPlacement& f0, unsigned d, unsigned max_r,
                                      const CheckOptions& opts = {});

}  // namespace treeramsey
