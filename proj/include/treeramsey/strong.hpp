#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "treeramsey/embedding.hpp"
#include "treeramsey/framework.hpp"

namespace treeramsey {

/// T^{k,N} with every T^{k,n}, n <= N, identified with its nodes of height <= n.
class LevelUniverse {
 public:
  LevelUniverse() = default;
  LevelUniverse(unsigned k, unsigned top);

  unsigned k() const { return k_; }
  unsigned top() const { return top_; }
  const OrderedTree& tree() const { return *tree_; }
  const std::shared_ptr<const OrderedTree>& tree_ptr() const { return tree_; }
  const OrderedTree& level_tree(unsigned n) const { return levels_.at(n); }
  unsigned height(NodeId u) const { return tree_->height(u); }

  /// Node of T^n -> node of the universe.
  NodeId lift(unsigned n, NodeId v) const { return to_universe_.at(n).at(v); }
  /// Node of the universe -> node of T^n, kNoNode above height n.
  NodeId lower(unsigned n, NodeId u) const { return from_universe_.at(n).at(u); }

  /// Path digits, "r" for the root.
  std::string node_label(NodeId u) const;

 private:
  unsigned k_ = 0;
  unsigned top_ = 0;
  std::shared_ptr<const OrderedTree> tree_ = std::make_shared<const OrderedTree>();
  std::vector<OrderedTree> levels_;
  std::vector<std::vector<NodeId>> to_universe_;
  std::vector<std::vector<NodeId>> from_universe_;
};

/// A strong embedding T^m -> T_inf; image[i] is the universe node of the i-th node of T^m.
struct StrongMap {
  std::uint32_t m = 0;
  std::vector<NodeId> image;
  friend auto operator<=>(const StrongMap&, const StrongMap&) = default;
};

/// A strong embedding S -> T_inf; `shape` is the canonical code of S.
struct Placement {
  std::string shape;
  std::vector<NodeId> image;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

enum class ShapeMode { Chains, Trees };

/// A = strong embeddings T^m -> T^n, X = embeddings of chains (STAR) or strong
/// embeddings of trees (MILLIKEN), acting by composition, truncated by
/// restriction to S*, normed by the largest image height.
class StrongBackground {
 public:
  using AElem = StrongMap;
  using XElem = Placement;

  /// Samples every element with image inside T^{k,top}; tree shapes up to `max_shape` nodes.
  StrongBackground(unsigned k, unsigned top, ShapeMode mode, unsigned max_shape, bool build_samples = true);

  const std::vector<StrongMap>& a_sample() const { return a_sample_; }
  const std::vector<Placement>& x_sample() const { return x_sample_; }
  std::optional<StrongMap> mult(const StrongMap& a, const StrongMap& b) const;
  std::optional<Placement> act(const StrongMap& a, const Placement& x) const;
  Placement trunc(const Placement& x) const;
  NormValue norm(const Placement& x) const;
  std::string label_a(const StrongMap& a) const;
  std::string label_x(const Placement& x) const;
  bool extends(const StrongMap& b, const StrongMap& a) const;

  const LevelUniverse& universe() const { return u_; }
  ShapeMode mode() const { return mode_; }

  /// Lifts a map T^m -> T^n given on T^n nodes.
  StrongMap lift_map(unsigned m, unsigned n, const std::vector<NodeId>& image) const;
  Placement lift_placement(const OrderedTree& s, unsigned n, const std::vector<NodeId>& image) const;
  StrongMap identity(unsigned m) const;

 private:
  const OrderedTree& shape_tree(const std::string& code) const;
  const InducedTree& shape_star(const std::string& code) const;

  LevelUniverse u_;
  ShapeMode mode_;
  std::vector<StrongMap> a_sample_;
  std::vector<Placement> x_sample_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::unique_ptr<std::pair<OrderedTree, InducedTree>>> shapes_;
};

/// Kind bits of a family of tree embeddings: every member as a plain strong
/// embedding, or as a strong leaf-preserving one. A set of both forms carries both bits.
inline constexpr int kPlain = 1;
inline constexpr int kLeaf = 2;

/// STAR: F = binom(T^n,T^m)^s and its leaf-preserving version, P = binom(T^n, m)
/// and binomsq(T^n, m). MILLIKEN: the same F and every non-empty binom(T^n, S)^s and
/// binomsq(T^n, S)^s with S up to `max_shape` nodes. Families with n <= maxN are
/// premises; n = maxN + 1 is the witness margin.
class StrongPair {
 public:
  using Background = StrongBackground;
  using AElem = StrongMap;
  using XElem = Placement;

  StrongPair(ShapeMode mode, unsigned k, unsigned max_n, unsigned max_shape = 4);

  const StrongBackground& background() const { return bg_; }
  const std::vector<Family<StrongMap>>& f_families() const { return f_; }
  const std::vector<Family<Placement>>& p_families() const { return p_; }
  std::optional<Family<Placement>> dot(const Family<StrongMap>& f, const Family<Placement>& p) const;
  std::optional<Family<StrongMap>> bullet(const Family<StrongMap>& f, const Family<StrongMap>& g) const;
  std::optional<Family<Placement>> recognize(const std::vector<Placement>& xs) const;

  /// binom(T^n,T^m)^s (kind kPlain) or its leaf-preserving version (kLeaf).
  Family<StrongMap> f_family(int kind, unsigned n, unsigned m) const;
  /// binom(T^n,S)^s or binomsq(T^n,S)^s.
  Family<Placement> p_family(int kind, unsigned n, const OrderedTree& s) const;

  unsigned k() const { return k_; }
  unsigned max_n() const { return max_n_; }
  ShapeMode mode() const { return bg_.mode(); }

 private:
  std::optional<Family<Placement>> find_p(int bits, unsigned n, const std::string& shape) const;

  unsigned k_;
  unsigned max_n_;
  StrongBackground bg_;
  std::vector<Family<StrongMap>> f_;
  std::vector<Family<Placement>> p_;
  std::map<std::vector<Placement>, std::size_t> p_index_;
};

struct StarPReport {
  Verdict verdict;
  unsigned r = 0;
  json attempts = json::array();
};

/// Condition (P) in the STAR instance for P = binom(T^q, p) (or binomsq with
/// `leaf`) and f0 in dP, with F = binom(T^r, T^q)^s and g0 = identity on T^{|f0|}.
/// Tries r = q, q+1, ..., max_r; each r is decided both directly on F_{g0}.P_{f0}
/// and on the reduced coloring problem inside T^r(v0), and the two must agree.
/// `g0_level` overrides the height of the fixed part.
StarPReport check_P_star_instance(unsigned k, unsigned q, unsigned p, const std::vector<NodeId>& f0, unsigned d,
                                  bool leaf, unsigned max_r, const CheckOptions& opts = {},
                                  std::optional<unsigned> g0_level = std::nullopt);

}  // namespace treeramsey
