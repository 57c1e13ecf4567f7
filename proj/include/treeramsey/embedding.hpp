#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "treeramsey/tree.hpp"

namespace treeramsey {

/// A function between two trees. The trees are shared, so copies are cheap.
class TreeMap {
 public:
  TreeMap() : TreeMap(OrderedTree{}, OrderedTree{}, {}) {}
  TreeMap(OrderedTree domain, OrderedTree codomain, std::vector<NodeId> image);
  TreeMap(std::shared_ptr<const OrderedTree> domain, std::shared_ptr<const OrderedTree> codomain,
          std::vector<NodeId> image);

  const OrderedTree& domain() const { return *domain_; }
  const OrderedTree& codomain() const { return *codomain_; }
  const std::shared_ptr<const OrderedTree>& domain_ptr() const { return domain_; }
  const std::shared_ptr<const OrderedTree>& codomain_ptr() const { return codomain_; }
  const std::vector<NodeId>& image() const { return image_; }
  NodeId operator()(NodeId v) const { return image_.at(v); }

  friend bool operator==(const TreeMap& a, const TreeMap& b) {
    return a.image_ == b.image_ && *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_;
  }

 private:
  std::shared_ptr<const OrderedTree> domain_;
  std::shared_ptr<const OrderedTree> codomain_;
  std::vector<NodeId> image_;
};

struct EmbeddingClass {
  bool morphism = false;
  bool embedding = false;
  bool leaf_preserving = false;
  bool strong = false;
  friend bool operator==(const EmbeddingClass&, const EmbeddingClass&) = default;
};

enum class Flavor { Emb, Leaf, Strong, StrongLeaf };

const char* flavor_name(Flavor f);
Flavor parse_flavor(std::string_view name);
bool satisfies(const EmbeddingClass& c, Flavor f);

/// Every flag is computed straight from its definition.
EmbeddingClass classify(const TreeMap& f);

/// Order preservation via the immediate-successor reformulation: f(v) < f(w)
/// for consecutive siblings v, w. Only meaningful for injective morphisms.
bool preserves_order_by_successors(const TreeMap& f);

/// Partial assignment for pinned enumeration; kNoNode marks a free node.
using Pins = std::vector<NodeId>;

/// Image sequences of all maps S -> T of the given flavor, lexicographically sorted.
std::vector<std::vector<NodeId>> enumerate_images(const OrderedTree& s, const OrderedTree& t, Flavor flavor,
                                                  const Pins& pins = {});
/// Same result, root placements searched concurrently.
std::vector<std::vector<NodeId>> enumerate_images_parallel(const OrderedTree& s, const OrderedTree& t,
                                                           Flavor flavor);
std::size_t count_embeddings(const OrderedTree& s, const OrderedTree& t, Flavor flavor);

std::vector<TreeMap> enumerate(const OrderedTree& s, const OrderedTree& t, Flavor flavor);

/// Every map S -> T filtered by classify; the oracle for enumerate.
std::vector<TreeMap> enumerate_brute_force(const OrderedTree& s, const OrderedTree& t, Flavor flavor);

TreeMap identity_map(const OrderedTree& t);
TreeMap compose(const TreeMap& g, const TreeMap& f);

enum class Derivation { Star, Prime };
TreeMap restrict(const TreeMap& f, Derivation mode);

/// The canonical embeddings T^{k,n} -> T^{k,n+1}.
TreeMap iota(unsigned k, unsigned n, Derivation variant);

/// Level map of a strong embedding: sigma[h] = height of the image of height-h nodes
/// (index 0 unused). Empty when f is not strong.
std::vector<unsigned> level_map(const TreeMap& f);

/// Splits g: T^{k,l} -> T^{k,n} into one-level steps g1, ..., g_{n-l} with
/// g = g_{n-l} o ... o g1, each of the requested flavor.
std::vector<TreeMap> factor_strong(const TreeMap& g, Flavor flavor);

}  // namespace treeramsey
