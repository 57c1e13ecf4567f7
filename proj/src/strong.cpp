#include "treeramsey/strong.hpp"

#include <algorithm>

namespace treeramsey {

LevelUniverse::LevelUniverse(unsigned k, unsigned top)
    : k_(k), top_(top), tree_(std::make_shared<const OrderedTree>(regular_tree(k, top))) {
  const auto& t = *tree_;
  for (unsigned n = 0; n <= top; ++n) {
    levels_.push_back(regular_tree(k, n));
    std::vector<NodeId> up;
    std::vector<NodeId> down(t.size(), kNoNode);
    for (NodeId u = 0; u < t.size(); ++u)
      if (t.height(u) <= n) {
        down[u] = static_cast<NodeId>(up.size());
        up.push_back(u);
      }
    if (up.size() != levels_.back().size()) throw std::logic_error("level universe: T^n is not a prefix by height");
    to_universe_.push_back(std::move(up));
    from_universe_.push_back(std::move(down));
  }
}

std::string LevelUniverse::node_label(NodeId u) const {
  std::string s = "r";
  for (auto c : path_of(*tree_, u)) s += std::to_string(c);
  return s;
}

StrongBackground::StrongBackground(unsigned k, unsigned top, ShapeMode mode, unsigned max_shape, bool build_samples)
    : u_(k, top), mode_(mode) {
  if (!build_samples) return;
  const auto& t = u_.tree();
  for (unsigned m = 0; m <= top; ++m)
    for (auto& img : enumerate_images(u_.level_tree(m), t, Flavor::Strong))
      a_sample_.push_back({m, std::move(img)});
  a_sample_ = sorted_set(std::move(a_sample_));

  std::vector<OrderedTree> shapes;
  if (mode == ShapeMode::Chains) {
    for (unsigned m = 0; m <= top; ++m) shapes.push_back(chain(m));
  } else {
    for (std::size_t n = 0; n <= max_shape; ++n)
      for (auto& s : all_ordered_trees(n)) shapes.push_back(std::move(s));
  }
  for (const auto& s : shapes) {
    const auto code = canonical_code(s);
    for (auto& img : enumerate_images(s, t, Flavor::Strong)) x_sample_.push_back({code, std::move(img)});
  }
  x_sample_ = sorted_set(std::move(x_sample_));
}

std::optional<StrongMap> StrongBackground::mult(const StrongMap& a, const StrongMap& b) const {
  StrongMap out{b.m, {}};
  out.image.reserve(b.image.size());
  for (auto u : b.image) {
    if (u_.height(u) > a.m) return std::nullopt;
    out.image.push_back(a.image[u_.lower(a.m, u)]);
  }
  return out;
}

std::optional<Placement> StrongBackground::act(const StrongMap& a, const Placement& x) const {
  Placement out{x.shape, {}};
  out.image.reserve(x.image.size());
  for (auto u : x.image) {
    if (u_.height(u) > a.m) return std::nullopt;
    out.image.push_back(a.image[u_.lower(a.m, u)]);
  }
  return out;
}

const OrderedTree& StrongBackground::shape_tree(const std::string& code) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = shapes_[code];
  if (!slot) {
    auto t = tree_from_code(code);
    auto star = derive_star_with_map(t);
    slot = std::make_unique<std::pair<OrderedTree, InducedTree>>(std::move(t), std::move(star));
  }
  return slot->first;
}

const InducedTree& StrongBackground::shape_star(const std::string& code) const {
  shape_tree(code);
  std::lock_guard lock(cache_mutex_);
  return shapes_.at(code)->second;
}

Placement StrongBackground::trunc(const Placement& x) const {
  const auto& star = shape_star(x.shape);
  Placement out{canonical_code(star.tree), {}};
  for (auto v : star.to_parent) out.image.push_back(x.image.at(v));
  return out;
}

NormValue StrongBackground::norm(const Placement& x) const {
  unsigned h = 0;
  for (auto u : x.image) h = std::max(h, u_.height(u));
  return NormValue::of(h);
}

std::string StrongBackground::label_a(const StrongMap& a) const {
  std::string s = "T^" + std::to_string(a.m) + "->[";
  for (std::size_t i = 0; i < a.image.size(); ++i) s += (i ? "," : "") + u_.node_label(a.image[i]);
  return s + "]";
}

std::string StrongBackground::label_x(const Placement& x) const {
  std::string s = x.shape + "->[";
  for (std::size_t i = 0; i < x.image.size(); ++i) s += (i ? "," : "") + u_.node_label(x.image[i]);
  return s + "]";
}

bool StrongBackground::extends(const StrongMap& b, const StrongMap& a) const {
  if (b.m < a.m) return a.m == 0;
  for (NodeId i = 0; i < a.image.size(); ++i)
    if (b.image[u_.lower(b.m, u_.lift(a.m, i))] != a.image[i]) return false;
  return true;
}

StrongMap StrongBackground::lift_map(unsigned m, unsigned n, const std::vector<NodeId>& image) const {
  StrongMap g{m, {}};
  for (auto v : image) g.image.push_back(u_.lift(n, v));
  return g;
}

Placement StrongBackground::lift_placement(const OrderedTree& s, unsigned n, const std::vector<NodeId>& image) const {
  Placement x{canonical_code(s), {}};
  for (auto v : image) x.image.push_back(u_.lift(n, v));
  return x;
}

StrongMap StrongBackground::identity(unsigned m) const {
  StrongMap g{m, {}};
  for (NodeId v = 0; v < u_.level_tree(m).size(); ++v) g.image.push_back(u_.lift(m, v));
  return g;
}

// ---------------------------------------------------------------------------

namespace {

std::string kind_prefix(int kind) { return kind == kLeaf ? "binomsq" : "binom"; }

Flavor kind_flavor(int kind) { return kind == kLeaf ? Flavor::StrongLeaf : Flavor::Strong; }

int single_bit(int bits) { return (bits & kPlain) ? kPlain : kLeaf; }

}  // namespace

Family<StrongMap> StrongPair::f_family(int kind, unsigned n, unsigned m) const {
  const auto& u = bg_.universe();
  Family<StrongMap> f;
  f.kind = kind;
  f.n = static_cast<int>(n);
  f.m = static_cast<int>(m);
  f.name = kind_prefix(kind) + "(T^" + std::to_string(n) + ",T^" + std::to_string(m) + ")^s";
  for (const auto& img : enumerate_images(u.level_tree(m), u.level_tree(n), kind_flavor(kind)))
    f.elems.push_back(bg_.lift_map(m, n, img));
  f.elems = sorted_set(std::move(f.elems));
  return f;
}

Family<Placement> StrongPair::p_family(int kind, unsigned n, const OrderedTree& s) const {
  const auto& u = bg_.universe();
  Family<Placement> f;
  f.kind = kind;
  f.n = static_cast<int>(n);
  f.m = static_cast<int>(s.size());
  f.shape = canonical_code(s);
  const bool is_chain = s.branching() <= 1;
  const auto what = is_chain && mode() == ShapeMode::Chains ? std::to_string(s.size()) : "S" + f.shape;
  f.name = kind_prefix(kind) + "(T^" + std::to_string(n) + "," + what + ")" +
           (mode() == ShapeMode::Chains ? "" : "^s");
  for (const auto& img : enumerate_images(s, u.level_tree(n), kind_flavor(kind)))
    f.elems.push_back(bg_.lift_placement(s, n, img));
  f.elems = sorted_set(std::move(f.elems));
  return f;
}

StrongPair::StrongPair(ShapeMode mode, unsigned k, unsigned max_n, unsigned max_shape)
    : k_(k), max_n_(max_n), bg_(k, max_n + 1, mode, max_shape) {
  const unsigned top = max_n + 1;
  auto merge = [](auto plain, auto leaf, auto& out, bool premise) {
    plain.premise = leaf.premise = premise;
    if (plain.elems.empty() && leaf.elems.empty()) return;
    if (plain.elems == leaf.elems) {
      plain.kind = kPlain | kLeaf;
      out.push_back(std::move(plain));
      return;
    }
    if (!plain.elems.empty()) out.push_back(std::move(plain));
    if (!leaf.elems.empty()) out.push_back(std::move(leaf));
  };
  for (unsigned n = 0; n <= top; ++n)
    for (unsigned m = 0; m <= n; ++m) {
      if (m == 0 && n != 0) continue;
      merge(f_family(kPlain, n, m), f_family(kLeaf, n, m), f_, n <= max_n);
    }

  std::vector<OrderedTree> shapes;
  if (mode == ShapeMode::Chains) {
    for (unsigned m = 0; m <= top; ++m) shapes.push_back(chain(m));
  } else {
    for (std::size_t n = 0; n <= max_shape; ++n)
      for (auto& s : all_ordered_trees(n)) shapes.push_back(std::move(s));
  }
  for (unsigned n = 0; n <= top; ++n)
    for (const auto& s : shapes) {
      if (s.empty() != (n == 0)) continue;
      if (mode == ShapeMode::Chains && s.size() > n) continue;
      merge(p_family(kPlain, n, s), p_family(kLeaf, n, s), p_, n <= max_n);
    }
  for (std::size_t i = 0; i < p_.size(); ++i) p_index_.emplace(p_[i].elems, i);
}

std::optional<Family<Placement>> StrongPair::find_p(int bits, unsigned n, const std::string& shape) const {
  for (const auto& p : p_)
    if ((p.kind & bits) && p.n == static_cast<int>(n) && p.shape == shape) return p;
  return std::nullopt;
}

std::optional<Family<Placement>> StrongPair::dot(const Family<StrongMap>& f, const Family<Placement>& p) const {
  const int bits = f.kind & p.kind;
  if (!bits || f.m != p.n) return std::nullopt;
  if (auto listed = find_p(bits, static_cast<unsigned>(f.n), p.shape)) return listed;
  return p_family(single_bit(bits), static_cast<unsigned>(f.n), tree_from_code(p.shape));
}

std::optional<Family<StrongMap>> StrongPair::bullet(const Family<StrongMap>& f, const Family<StrongMap>& g) const {
  const int bits = f.kind & g.kind;
  if (!bits || f.m != g.n) return std::nullopt;
  for (const auto& h : f_)
    if ((h.kind & bits) && h.n == f.n && h.m == g.m) return h;
  return f_family(single_bit(bits), static_cast<unsigned>(f.n), static_cast<unsigned>(g.m));
}

std::optional<Family<Placement>> StrongPair::recognize(const std::vector<Placement>& xs) const {
  auto it = p_index_.find(xs);
  if (it == p_index_.end()) return std::nullopt;
  return p_[it->second];
}

// ---------------------------------------------------------------------------

StarPReport check_P_star_instance(unsigned k, unsigned q, unsigned p, const std::vector<NodeId>& f0, unsigned d,
                                  bool leaf, unsigned max_r, const CheckOptions& opts,
                                  std::optional<unsigned> g0_level) {
  if (p == 0 || p > q) throw std::invalid_argument("check_P_star_instance needs 0 < p <= q");
  if (f0.size() + 1 != p) throw std::invalid_argument("f0 must be defined on [p-1]");
  const auto tq = regular_tree(k, q);
  const auto sp = chain(p);
  const Flavor flavor = leaf ? Flavor::StrongLeaf : Flavor::Strong;
  for (auto v : f0)
    if (!tq.contains(v)) throw std::invalid_argument("f0 leaves T^q");

  Pins fpins(p, kNoNode);
  std::copy(f0.begin(), f0.end(), fpins.begin());
  const auto fiber_maps = enumerate_images(sp, tq, flavor, fpins);
  if (fiber_maps.empty()) throw std::invalid_argument("f0 is not in the truncation of P");

  const unsigned h = f0.empty() ? 0 : tq.height(f0.back());
  const unsigned fixed = g0_level.value_or(h);
  if (fixed > q) throw std::invalid_argument("g0 level exceeds q");
  const NodeId v0 = f0.empty() ? tq.root() : tq.children(f0.back()).front();

  std::vector<std::vector<NodeId>> tail;
  const auto sub_q = subtree(tq, v0);
  std::vector<NodeId> in_sub(tq.size(), kNoNode);
  for (NodeId i = 0; i < sub_q.to_parent.size(); ++i) in_sub[sub_q.to_parent[i]] = i;
  for (const auto& f : fiber_maps) tail.push_back({in_sub.at(f.back())});

  StarPReport rep;
  for (unsigned r = q; r <= max_r; ++r) {
    const auto tr = regular_tree(k, r);
    Pins gpins(tq.size(), kNoNode);
    for (NodeId v = 0; v < tq.size(); ++v)
      if (tq.height(v) <= fixed) {
        auto path = path_of(tq, v);
        gpins[v] = node_at(tr, path);
      }
    const auto gs = enumerate_images(tq, tr, flavor, gpins);
    auto direct = composition_verdict(tr, gs, fiber_maps, d, opts);
    json attempt = {{"r", r}, {"extenders", gs.size()}, {"fiber", fiber_maps.size()}, {"direct", direct.to_json()}};
    if (fixed == h && direct.status != Status::Undecided) {
      // the same question inside T^r(v0), where g is a free strong embedding of T^q(v0)
      const auto small = regular_tree(k, q - h);
      const auto big = regular_tree(k, r - h);
      auto reduced = composition_verdict(big, enumerate_images(small, big, flavor), tail, d, opts);
      attempt["reduced"] = reduced.to_json();
      if (reduced.status != Status::Undecided && reduced.status != direct.status)
        throw std::logic_error("check_P_star_instance: direct and reduced verdicts disagree at r = " +
                               std::to_string(r));
    }
    rep.attempts.push_back(attempt);
    if (direct.status == Status::Pass) {
      rep.r = r;
      rep.verdict = {Status::Pass,
                     {{"kind", "P-star"}, {"r", r}, {"g0_level", fixed}, {"attempts", rep.attempts}}};
      return rep;
    }
    if (direct.status == Status::Undecided) {
      rep.verdict = {Status::Undecided,
                     {{"kind", "P-star"}, {"max_r", r}, {"g0_level", fixed}, {"attempts", rep.attempts}}};
      return rep;
    }
  }
  rep.verdict = {Status::Fail, {{"kind", "P-star"}, {"max_r", max_r}, {"g0_level", fixed}, {"attempts", rep.attempts}}};
  return rep;
}

}  // namespace treeramsey
