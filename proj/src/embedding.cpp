#include "treeramsey/embedding.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include <omp.h>

namespace treeramsey {

TreeMap::TreeMap(OrderedTree domain, OrderedTree codomain, std::vector<NodeId> image)
    : TreeMap(std::make_shared<const OrderedTree>(std::move(domain)),
              std::make_shared<const OrderedTree>(std::move(codomain)), std::move(image)) {}

TreeMap::TreeMap(std::shared_ptr<const OrderedTree> domain, std::shared_ptr<const OrderedTree> codomain,
                 std::vector<NodeId> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != domain_->size()) throw std::invalid_argument("image length differs from domain size");
  for (auto v : image_)
    if (!codomain_->contains(v)) throw std::invalid_argument("image entry outside the codomain");
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Emb: return "EMB";
    case Flavor::Leaf: return "LEAF";
    case Flavor::Strong: return "STRONG";
    case Flavor::StrongLeaf: return "STRONG_LEAF";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  if (s == "EMB") return Flavor::Emb;
  if (s == "LEAF") return Flavor::Leaf;
  if (s == "STRONG") return Flavor::Strong;
  if (s == "STRONG_LEAF" || s == "STRONGLEAF") return Flavor::StrongLeaf;
  throw std::invalid_argument("unknown embedding flavor: " + std::string(name));
}

bool satisfies(const EmbeddingClass& c, Flavor f) {
  switch (f) {
    case Flavor::Emb: return c.embedding;
    case Flavor::Leaf: return c.leaf_preserving;
    case Flavor::Strong: return c.strong;
    case Flavor::StrongLeaf: return c.strong && c.leaf_preserving;
  }
  return false;
}

namespace {

// the immediate successor of `top` on the way down to `v`
NodeId successor_towards(const OrderedTree& t, NodeId top, NodeId v) {
  while (t.parent(v) != top) v = t.parent(v);
  return v;
}

}  // namespace

EmbeddingClass classify(const TreeMap& f) {
  const auto& s = f.domain();
  const auto& t = f.codomain();
  const std::size_t n = s.size();
  EmbeddingClass c;

  c.morphism = true;
  for (NodeId v = 0; v < n && c.morphism; ++v)
    for (NodeId w = v; w < n; ++w)
      if (f(wedge(s, v, w)) != wedge(t, f(v), f(w))) {
        c.morphism = false;
        break;
      }
  if (!c.morphism) return c;

  bool injective = true, ordered = true;
  for (NodeId v = 0; v < n; ++v)
    for (NodeId w = v + 1; w < n; ++w) {
      if (f(v) == f(w)) injective = false;
      if (lex_compare(s, v, w) != lex_compare(t, f(v), f(w))) ordered = false;
    }

  bool initial_segments = true;
  for (NodeId v = 0; v < n && injective && initial_segments; ++v) {
    std::vector<std::size_t> used;
    for (auto w : s.children(v)) used.push_back(t.sibling_rank(successor_towards(t, f(v), f(w))));
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (std::size_t i = 0; i < used.size(); ++i)
      if (used[i] != i) initial_segments = false;
  }
  c.embedding = injective && ordered && initial_segments;
  if (!c.embedding) return c;

  c.leaf_preserving = true;
  for (NodeId v = 0; v < n; ++v)
    if (s.is_leaf(v) && !t.is_leaf(f(v))) c.leaf_preserving = false;

  c.strong = true;
  for (NodeId v = 0; v < n; ++v)
    for (NodeId w = v + 1; w < n; ++w)
      if (s.height(v) == s.height(w) && t.height(f(v)) != t.height(f(w))) c.strong = false;
  return c;
}

bool preserves_order_by_successors(const TreeMap& f) {
  const auto& s = f.domain();
  const auto& t = f.codomain();
  for (NodeId v = 0; v < s.size(); ++v) {
    auto kids = s.children(v);
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        const NodeId a = successor_towards(t, f(v), f(kids[i]));
        const NodeId b = successor_towards(t, f(v), f(kids[j]));
        if (t.sibling_rank(a) > t.sibling_rank(b)) return false;
      }
  }
  return true;
}

namespace {

// In an embedding the j-th child of v lands below the j-th child of f(v):
// images of distinct children sit under distinct, increasing successors,
// and clause (ii) forces those successors to start at the first one.
class Enumerator {
 public:
  Enumerator(const OrderedTree& s, const OrderedTree& t, Flavor flavor, const Pins& pins)
      : s_(s), t_(t), pins_(pins), image_(s.size(), kNoNode), sigma_(s.height() + 1, 0), sigma_uses_(s.height() + 1, 0) {
    leaf_ = flavor == Flavor::Leaf || flavor == Flavor::StrongLeaf;
    strong_ = flavor == Flavor::Strong || flavor == Flavor::StrongLeaf;
    if (!pins_.empty() && pins_.size() != s.size()) throw std::invalid_argument("pin vector length differs from domain size");
  }

  template <class Sink>
  void run(Sink&& sink) {
    if (s_.empty()) {
      sink(image_);
      return;
    }
    for (NodeId r = 0; r < t_.size(); ++r) run_from_root(r, sink);
  }

  template <class Sink>
  void run_from_root(NodeId r, Sink&& sink) {
    if (s_.empty()) return;
    if (try_place(0, r)) {
      extend(1, sink);
      unplace(0);
    }
  }

 private:
  bool try_place(NodeId i, NodeId cand) {
    if (!pins_.empty() && pins_[i] != kNoNode && pins_[i] != cand) return false;
    if (leaf_ && s_.is_leaf(i) && !t_.is_leaf(cand)) return false;
    if (strong_) {
      const unsigned h = s_.height(i);
      if (sigma_uses_[h] > 0 && sigma_[h] != t_.height(cand)) return false;
      sigma_[h] = t_.height(cand);
      ++sigma_uses_[h];
    }
    image_[i] = cand;
    return true;
  }

  void unplace(NodeId i) {
    if (strong_) --sigma_uses_[s_.height(i)];
    image_[i] = kNoNode;
  }

  template <class Sink>
  void extend(NodeId i, Sink& sink) {
    if (i == s_.size()) {
      sink(image_);
      return;
    }
    const NodeId p = s_.parent(i);
    const std::size_t j = s_.sibling_rank(i);
    auto slots = t_.children(image_[p]);
    if (j >= slots.size()) return;
    const NodeId lo = slots[j];
    for (NodeId cand = lo; cand < t_.subtree_end(lo); ++cand) {
      if (!try_place(i, cand)) continue;
      extend(i + 1, sink);
      unplace(i);
    }
  }

  const OrderedTree& s_;
  const OrderedTree& t_;
  const Pins& pins_;
  bool leaf_ = false;
  bool strong_ = false;
  std::vector<NodeId> image_;
  std::vector<unsigned> sigma_;
  std::vector<unsigned> sigma_uses_;
};

}  // namespace

std::vector<std::vector<NodeId>> enumerate_images(const OrderedTree& s, const OrderedTree& t, Flavor flavor,
                                                  const Pins& pins) {
  std::vector<std::vector<NodeId>> out;
  Enumerator e(s, t, flavor, pins);
  e.run([&](const std::vector<NodeId>& img) { out.push_back(img); });
  return out;
}

std::vector<std::vector<NodeId>> enumerate_images_parallel(const OrderedTree& s, const OrderedTree& t,
                                                           Flavor flavor) {
  if (s.empty()) return enumerate_images(s, t, flavor);
  const auto roots = static_cast<long>(t.size());
  std::vector<std::vector<std::vector<NodeId>>> per_root(t.size());
  const Pins none;
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < roots; ++r) {
    Enumerator e(s, t, flavor, none);
    auto& bucket = per_root[static_cast<std::size_t>(r)];
    e.run_from_root(static_cast<NodeId>(r), [&](const std::vector<NodeId>& img) { bucket.push_back(img); });
  }
  std::vector<std::vector<NodeId>> out;
  for (auto& bucket : per_root)
    for (auto& img : bucket) out.push_back(std::move(img));
  return out;
}

std::size_t count_embeddings(const OrderedTree& s, const OrderedTree& t, Flavor flavor) {
  std::size_t n = 0;
  Enumerator e(s, t, flavor, {});
  e.run([&](const std::vector<NodeId>&) { ++n; });
  return n;
}

std::vector<TreeMap> enumerate(const OrderedTree& s, const OrderedTree& t, Flavor flavor) {
  auto sp = std::make_shared<const OrderedTree>(s);
  auto tp = std::make_shared<const OrderedTree>(t);
  std::vector<TreeMap> out;
  for (auto& img : enumerate_images(s, t, flavor)) out.emplace_back(sp, tp, std::move(img));
  return out;
}

std::vector<TreeMap> enumerate_brute_force(const OrderedTree& s, const OrderedTree& t, Flavor flavor) {
  auto sp = std::make_shared<const OrderedTree>(s);
  auto tp = std::make_shared<const OrderedTree>(t);
  std::vector<TreeMap> out;
  if (!s.empty() && t.empty()) return out;
  std::vector<NodeId> img(s.size(), 0);
  while (true) {
    TreeMap f(sp, tp, img);
    if (satisfies(classify(f), flavor)) out.push_back(std::move(f));
    std::size_t i = img.size();
    while (i > 0 && img[i - 1] + 1 == t.size()) img[--i] = 0;
    if (i == 0) break;
    ++img[i - 1];
  }
  return out;
}

TreeMap identity_map(const OrderedTree& t) {
  auto tp = std::make_shared<const OrderedTree>(t);
  std::vector<NodeId> img(t.size());
  for (NodeId v = 0; v < t.size(); ++v) img[v] = v;
  return TreeMap(tp, tp, std::move(img));
}

TreeMap compose(const TreeMap& g, const TreeMap& f) {
  if (!(f.codomain() == g.domain())) throw std::invalid_argument("compose: codomain of f is not the domain of g");
  std::vector<NodeId> img(f.image().size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g(f.image()[i]);
  return TreeMap(f.domain_ptr(), g.codomain_ptr(), std::move(img));
}

TreeMap restrict(const TreeMap& f, Derivation mode) {
  InducedTree sub;
  if (mode == Derivation::Star) {
    sub = derive_star_with_map(f.domain());
  } else {
    auto r = derive_prime(f.domain());
    sub.tree = std::move(r.derived);
    sub.to_parent = std::move(r.kept);
  }
  std::vector<NodeId> img;
  for (auto v : sub.to_parent) img.push_back(f(v));
  return TreeMap(std::make_shared<const OrderedTree>(std::move(sub.tree)), f.codomain_ptr(), std::move(img));
}

TreeMap iota(unsigned k, unsigned n, Derivation variant) {
  auto src = regular_tree(k, n);
  auto dst = regular_tree(k, n + 1);
  std::vector<NodeId> img;
  for (NodeId v = 0; v < src.size(); ++v) {
    auto path = path_of(src, v);
    if (variant == Derivation::Prime && k > 0) path.insert(path.begin(), 0);
    img.push_back(node_at(dst, path));
  }
  return TreeMap(std::move(src), std::move(dst), std::move(img));
}

std::vector<unsigned> level_map(const TreeMap& f) {
  const auto& s = f.domain();
  std::vector<unsigned> sigma(s.height() + 1, 0);
  for (NodeId v = 0; v < s.size(); ++v) {
    const unsigned h = f.codomain().height(f(v));
    if (sigma[s.height(v)] != 0 && sigma[s.height(v)] != h) return {};
    sigma[s.height(v)] = h;
  }
  return sigma;
}

std::vector<TreeMap> factor_strong(const TreeMap& g, Flavor flavor) {
  if (flavor != Flavor::Strong && flavor != Flavor::StrongLeaf)
    throw std::invalid_argument("factor_strong needs a strong flavor");
  if (!satisfies(classify(g), flavor)) throw std::invalid_argument("factor_strong: map does not have the requested flavor");
  const auto& dom = g.domain();
  const auto& cod = g.codomain();
  const unsigned k = static_cast<unsigned>(std::max(dom.branching(), cod.branching()));
  const unsigned l = dom.height();
  const unsigned n = cod.height();
  if (!(dom == regular_tree(k, l)) || !(cod == regular_tree(k, n)) || l > n)
    throw std::invalid_argument("factor_strong expects a map T^{k,l} -> T^{k,n} with l <= n");

  std::vector<TreeMap> factors;
  TreeMap rest = g;
  for (unsigned cur = l; cur < n; ++cur) {
    const auto sigma = level_map(rest);
    std::vector<bool> hit(n + 1, false);
    for (unsigned h = 1; h < sigma.size(); ++h) hit[sigma[h]] = true;
    unsigned j = 1;
    while (hit[j]) ++j;
    unsigned i = 0;
    for (unsigned h = 1; h <= cur; ++h)
      if (sigma[h] < j) i = h;

    auto mid = std::make_shared<const OrderedTree>(regular_tree(k, cur + 1));
    const auto& here = rest.domain_ptr();
    bool found = false;
    for (auto& img1 : enumerate_images(*here, *mid, flavor)) {
      TreeMap g1(here, mid, img1);
      const auto s1 = level_map(g1);
      bool profile = true;
      for (unsigned h = 1; h <= cur; ++h)
        if (s1[h] != (h <= i ? h : h + 1)) profile = false;
      if (!profile) continue;
      Pins pins(mid->size(), kNoNode);
      for (NodeId v = 0; v < here->size(); ++v) pins[img1[v]] = rest(v);
      auto second = enumerate_images(*mid, cod, flavor, pins);
      auto pick = std::find_if(second.begin(), second.end(), [&](const std::vector<NodeId>& img2) {
        return level_map(TreeMap(mid, rest.codomain_ptr(), img2))[i + 1] == j;
      });
      if (pick == second.end()) continue;
      factors.push_back(g1);
      rest = TreeMap(mid, rest.codomain_ptr(), std::move(*pick));
      found = true;
      break;
    }
    if (!found) throw std::logic_error("factor_strong: no one-level factor found");
  }
  // after n - l steps the remainder is a self-embedding of T^{k,n}, i.e. the identity
  if (l < n && !(rest == identity_map(cod))) throw std::logic_error("factor_strong: remainder is not the identity");
  return factors;
}

}  // namespace treeramsey
