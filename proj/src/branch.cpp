#include "treeramsey/branch.hpp"

#include <algorithm>

namespace treeramsey {

BranchUniverse::BranchUniverse(unsigned k, unsigned window)
    : k_(k), window_(window), tree_(std::make_shared<const OrderedTree>(regular_tree(k, window))) {
  for (unsigned n = 0; n <= window; ++n) levels_.push_back(regular_tree(k, n));
  for (NodeId v = 0; v < tree_->size(); ++v) {
    unsigned z = 0;
    for (auto c : path_of(*tree_, v)) {
      if (c != 0) break;
      ++z;
    }
    leading_zeros_.push_back(z);
  }
}

NodeId BranchUniverse::last_leaf(unsigned n) const {
  if (n == 0 || n > window_) throw std::invalid_argument("last_leaf: level outside the window");
  return static_cast<NodeId>(window_ - n + levels_[n].size() - 1);
}

NodeId BranchUniverse::lower(unsigned n, ExtNode e) const {
  const auto lo = static_cast<ExtNode>(window_) - n;
  if (n > window_ || e < lo || e >= lo + static_cast<ExtNode>(levels_[n].size())) return kNoNode;
  return static_cast<NodeId>(e - lo);
}

unsigned BranchUniverse::min_level(ExtNode e) const {
  if (e < 0) return static_cast<unsigned>(window_ - e);
  return std::max(1u, window_ - leading_zeros_.at(static_cast<std::size_t>(e)));
}

std::string BranchUniverse::node_label(ExtNode e) const {
  if (e < 0) return "v" + std::to_string(window_ - e);
  std::string s = "r";
  for (auto c : path_of(*tree_, static_cast<NodeId>(e))) s += std::to_string(c);
  return s;
}

BranchMap branch_element(const BranchUniverse& u, unsigned m, unsigned n, const std::vector<NodeId>& core) {
  if (m == 0 && n == 0) return {true, 0, 0, {}};
  if (m == 0 || m > n || n > u.window()) throw std::invalid_argument("branch_element: need 0 < m <= n <= N");
  if (core.size() != u.level_tree(m).size()) throw std::invalid_argument("branch_element: core is not defined on T^m");
  BranchMap g;
  g.x = u.last_leaf(m);
  g.shift = static_cast<std::int64_t>(n) - m;
  const ExtNode lo = u.root_of(m);
  for (ExtNode e = 0; e <= static_cast<ExtNode>(g.x); ++e)
    g.values.push_back(e < lo ? e - g.shift : static_cast<ExtNode>(u.lift(n, core.at(e - lo))));
  return g;
}

BranchBackground::BranchBackground(unsigned k, unsigned window, unsigned max_shape, bool build_samples)
    : u_(k, window) {
  if (!build_samples) return;
  std::vector<BranchMap> base{{true, 0, 0, {}}};
  for (unsigned n = 1; n <= window; ++n)
    for (unsigned m = 1; m <= n; ++m)
      for (const auto& core : enumerate_images(u_.level_tree(m), u_.level_tree(n), Flavor::Leaf))
        base.push_back(branch_element(u_, m, n, core));
  a_sample_ = base;
  for (const auto& a : base)
    for (const auto& b : base)
      if (auto ab = mult(a, b)) a_sample_.push_back(std::move(*ab));
  a_sample_ = sorted_set(std::move(a_sample_));

  const auto& t = u_.tree();
  for (std::size_t n = 0; n <= max_shape; ++n)
    for (const auto& s : all_ordered_trees(n)) {
      const auto code = canonical_code(s);
      for (const auto& img : enumerate_images(s, t, Flavor::Leaf))
        x_sample_.push_back({code, std::vector<ExtNode>(img.begin(), img.end())});
    }
  x_sample_ = sorted_set(std::move(x_sample_));
}

ExtNode BranchBackground::apply(const BranchMap& a, ExtNode e) const {
  return e < 0 ? e - a.shift : a.values[static_cast<std::size_t>(e)];
}

std::optional<BranchMap> BranchBackground::mult(const BranchMap& a, const BranchMap& b) const {
  if (b.empty) return b;
  if (a.empty) return std::nullopt;
  BranchMap out{false, b.x, a.shift + b.shift, {}};
  out.values.reserve(b.values.size());
  for (auto e : b.values) {
    if (e > static_cast<ExtNode>(a.x)) return std::nullopt;
    out.values.push_back(apply(a, e));
  }
  return out;
}

std::optional<BranchPlacement> BranchBackground::act(const BranchMap& a, const BranchPlacement& x) const {
  if (a.empty) {
    if (!x.image.empty()) return std::nullopt;
    return x;
  }
  BranchPlacement out{x.shape, {}};
  out.image.reserve(x.image.size());
  for (auto e : x.image) {
    if (e > static_cast<ExtNode>(a.x)) return std::nullopt;
    out.image.push_back(apply(a, e));
  }
  return out;
}

const DerivePrimeResult& BranchBackground::shape_prime(const std::string& code) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = primes_[code];
  if (!slot) slot = std::make_unique<DerivePrimeResult>(derive_prime(tree_from_code(code)));
  return *slot;
}

BranchPlacement BranchBackground::trunc(const BranchPlacement& x) const {
  const auto& prime = shape_prime(x.shape);
  BranchPlacement out{canonical_code(prime.derived), {}};
  for (auto v : prime.kept) out.image.push_back(x.image.at(v));
  return out;
}

NormValue BranchBackground::norm(const BranchPlacement& x) const {
  if (x.image.empty()) return NormValue::minus_infinity();
  return NormValue::of(*std::max_element(x.image.begin(), x.image.end()));
}

std::string BranchBackground::label_a(const BranchMap& a) const {
  if (a.empty) return "empty";
  std::string s = "T_" + u_.node_label(a.x) + "->[";
  for (std::size_t i = 0; i < a.values.size(); ++i) s += (i ? "," : "") + u_.node_label(a.values[i]);
  return s + "]+" + std::to_string(a.shift);
}

std::string BranchBackground::label_x(const BranchPlacement& x) const {
  std::string s = x.shape + "->[";
  for (std::size_t i = 0; i < x.image.size(); ++i) s += (i ? "," : "") + u_.node_label(x.image[i]);
  return s + "]";
}

bool BranchBackground::extends(const BranchMap& b, const BranchMap& a) const {
  if (a.empty) return true;
  if (b.empty || b.x < a.x || b.shift != a.shift) return false;
  return std::equal(a.values.begin(), a.values.end(), b.values.begin());
}

BranchPlacement BranchBackground::lift_placement(const OrderedTree& s, unsigned n,
                                                 const std::vector<NodeId>& image) const {
  BranchPlacement x{canonical_code(s), {}};
  for (auto v : image) x.image.push_back(u_.lift(n, v));
  return x;
}

OrderedTree based_on(const std::vector<BranchPlacement>& q) {
  if (q.empty()) throw std::invalid_argument("based_on: empty set");
  for (const auto& f : q)
    if (f.shape != q.front().shape) throw std::invalid_argument("based_on: elements have different domains");
  return tree_from_code(q.front().shape);
}

unsigned min_level(const BranchUniverse& u, const std::vector<BranchPlacement>& q) {
  unsigned m = 0;
  for (const auto& f : q)
    for (auto e : f.image) m = std::max(m, u.min_level(e));
  return m;
}

// ---------------------------------------------------------------------------

Family<BranchMap> BranchPair::g_family(unsigned n, unsigned m) const {
  const auto& u = bg_.universe();
  Family<BranchMap> f;
  f.name = "binomsq(T^" + std::to_string(n) + ",T^" + std::to_string(m) + ")^inf";
  f.n = static_cast<int>(n);
  f.m = static_cast<int>(m);
  if (m == 0 && n == 0) {
    f.elems.push_back({true, 0, 0, {}});
    return f;
  }
  for (const auto& core : enumerate_images(u.level_tree(m), u.level_tree(n), Flavor::Leaf))
    f.elems.push_back(branch_element(u, m, n, core));
  f.elems = sorted_set(std::move(f.elems));
  return f;
}

Family<BranchPlacement> BranchPair::lp_family(const OrderedTree& s, unsigned n) const {
  Family<BranchPlacement> f;
  f.shape = canonical_code(s);
  f.name = "lp(S" + f.shape + ",T^" + std::to_string(n) + ")";
  for (const auto& img : enumerate_images(s, bg_.universe().level_tree(n), Flavor::Leaf))
    f.elems.push_back(bg_.lift_placement(s, n, img));
  f.elems = sorted_set(std::move(f.elems));
  f.n = static_cast<int>(min_level(bg_.universe(), f.elems));
  f.m = static_cast<int>(s.size());
  return f;
}

BranchPair::BranchPair(unsigned k, unsigned window, unsigned max_shape) : bg_(k, window, max_shape) {
  f_.push_back(g_family(0, 0));
  for (unsigned n = 1; n <= window; ++n)
    for (unsigned m = 1; m <= n; ++m) {
      auto g = g_family(n, m);
      g.premise = n < window;
      f_.push_back(std::move(g));
    }

  std::vector<Family<BranchPlacement>> listed;
  listed.push_back({"{empty}", {BranchPlacement{"", {}}}, true, 0, 0, 0, ""});
  for (std::size_t size = 1; size <= max_shape; ++size)
    for (const auto& s : all_ordered_trees(size))
      for (unsigned n = 1; n < window; ++n) {
        auto q = lp_family(s, n);
        if (q.elems.empty()) continue;
        if (q.elems.size() > 1) {
          auto one = q;
          one.elems = {q.elems.back()};
          one.n = static_cast<int>(min_level(bg_.universe(), one.elems));
          one.name = "{last of " + q.name + "}";
          listed.push_back(std::move(one));
        }
        listed.push_back(std::move(q));
      }
  std::map<std::vector<BranchPlacement>, bool> seen;
  for (auto& q : listed) {
    if (seen.count(q.elems)) continue;
    seen[q.elems] = true;
    if (!q.elems.front().image.empty()) {
      const auto dq = trunc_set(bg_, q.elems);
      const auto lift = q.n - static_cast<int>(min_level(bg_.universe(), dq));
      for (const auto& g : f_)
        if (g.premise && g.m == static_cast<int>(min_level(bg_.universe(), dq)) &&
            g.n + lift > static_cast<int>(window))
          q.premise = false;
    }
    q_.push_back(std::move(q));
  }
}

std::optional<Family<BranchPlacement>> BranchPair::recognize(const std::vector<BranchPlacement>& xs) const {
  if (xs.empty()) return std::nullopt;
  for (const auto& x : xs)
    if (x.shape != xs.front().shape) return std::nullopt;
  auto elems = sorted_set(xs);
  for (const auto& q : q_)
    if (q.elems == elems) return q;
  Family<BranchPlacement> f;
  f.elems = std::move(elems);
  f.shape = xs.front().shape;
  f.n = static_cast<int>(min_level(bg_.universe(), f.elems));
  f.m = static_cast<int>(tree_from_code(f.shape).size());
  f.name = "Q(S" + f.shape + ",#" + std::to_string(f.elems.size()) + ",T^" + std::to_string(f.n) + ")";
  return f;
}

std::optional<Family<BranchPlacement>> BranchPair::dot(const Family<BranchMap>& f,
                                                       const Family<BranchPlacement>& q) const {
  if (q.elems.empty() || f.m != static_cast<int>(min_level(bg_.universe(), q.elems))) return std::nullopt;
  std::vector<BranchPlacement> out;
  for (const auto& g : f.elems)
    for (const auto& x : q.elems)
      if (auto y = bg_.act(g, x)) out.push_back(std::move(*y));
  if (out.empty()) return std::nullopt;
  auto r = recognize(out);
  if (r) r->name = f.name + "." + q.name;
  return r;
}

std::optional<Family<BranchMap>> BranchPair::bullet(const Family<BranchMap>& f, const Family<BranchMap>& g) const {
  if (f.m != g.n) return std::nullopt;
  for (const auto& h : f_)
    if (h.n == f.n && h.m == g.m) return h;
  return g_family(static_cast<unsigned>(f.n), static_cast<unsigned>(g.m));
}

// ---------------------------------------------------------------------------

std::vector<NodeId> successors_after(const OrderedTree& tq, NodeId x) {
  std::vector<NodeId> out;
  for (NodeId a = x;; a = tq.parent(a)) {
    for (auto c : tq.children(a))
      if (c > x) out.push_back(c);
    if (a == tq.root()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BranchPReport check_P_branch_instance(const BranchUniverse& u, const std::vector<BranchPlacement>& q,
                                      const BranchPlacement& f0, unsigned d, unsigned max_r,
                                      const CheckOptions& opts) {
  const auto s = based_on(q);
  if (s.empty()) throw std::invalid_argument("check_P_branch_instance: Q = {empty function} has no truncation");
  const unsigned ql = min_level(u, q);
  if (ql > u.window()) throw std::invalid_argument("check_P_branch_instance: Q leaves the window");
  const auto prime = derive_prime(s);
  if (f0.shape != canonical_code(prime.derived)) throw std::invalid_argument("f0 is not defined on S'");

  const auto tq = regular_tree(u.k(), ql);
  auto local = [&](ExtNode e) {
    auto v = u.lower(ql, e);
    if (v == kNoNode) throw std::invalid_argument("image outside T^q");
    return v;
  };
  std::vector<std::vector<NodeId>> fiber_maps;
  for (const auto& f : q) {
    bool over = true;
    for (std::size_t i = 0; i < prime.kept.size(); ++i)
      if (f.image.at(prime.kept[i]) != f0.image.at(i)) over = false;
    if (!over) continue;
    std::vector<NodeId> img;
    for (auto e : f.image) img.push_back(local(e));
    fiber_maps.push_back(std::move(img));
  }
  if (fiber_maps.empty()) throw std::invalid_argument("f0 is not in the truncation of Q");

  BranchPReport rep;
  rep.q = ql;
  rep.reader_case = prime.derived.empty();

  std::optional<NodeId> x;
  std::optional<NodeId> w0;
  std::vector<NodeId> e_set;
  std::vector<std::vector<NodeId>> tails;
  if (!rep.reader_case) {
    NodeId xm = 0;
    for (auto e : f0.image) xm = std::max(xm, local(e));
    x = xm;
    std::size_t u0 = 0;
    while (prime.kept[u0] != *prime.splitting) ++u0;
    const NodeId v0 = local(f0.image[u0]);
    e_set = successors_after(tq, *x);
    for (auto w : e_set)
      if (tq.parent(w) == v0) {
        w0 = w;
        break;
      }
    if (!w0) throw std::logic_error("check_P_branch_instance: v0 has no successor after x");
    for (const auto& f : fiber_maps) {
      std::vector<NodeId> t;
      for (auto v : prime.removed) {
        const auto node = f.at(v);
        if (!tq.is_predecessor(*w0, node)) throw std::logic_error("check_P_branch_instance: tail leaves T^q(w0)");
        t.push_back(node - *w0);
      }
      tails.push_back(std::move(t));
    }
  }

  for (unsigned r = ql; r <= max_r; ++r) {
    const auto tr = regular_tree(u.k(), r);
    Pins pins(tq.size(), kNoNode);
    if (x)
      for (NodeId v = 0; v <= *x; ++v) {
        auto path = path_of(tq, v);
        if (tq.is_leaf(v)) path.resize(path.size() + (r - ql), 0);
        pins[v] = node_at(tr, path);
      }
    const auto gs = enumerate_images(tq, tr, Flavor::Leaf, pins);
    auto direct = composition_verdict(tr, gs, fiber_maps, d, opts);
    json attempt = {{"r", r}, {"extenders", gs.size()}, {"fiber", fiber_maps.size()}, {"direct", direct.to_json()}};
    if (w0 && direct.status != Status::Undecided) {
      const auto sub_q = subtree(tq, *w0);
      const auto sub_r = subtree(tr, node_at(tr, path_of(tq, *w0)));
      auto reduced = composition_verdict(sub_r.tree, enumerate_images(sub_q.tree, sub_r.tree, Flavor::Leaf), tails, d,
                                         opts);
      attempt["reduced"] = reduced.to_json();
      if (reduced.status != Status::Undecided && reduced.status != direct.status)
        throw std::logic_error("check_P_branch_instance: direct and reduced verdicts disagree at r = " +
                               std::to_string(r));
    }
    rep.attempts.push_back(attempt);
    if (direct.status != Status::Fail || r == max_r) {
      rep.r = r;
      json cert = {{"kind", "P-branch"}, {"q", ql}, {"r", r}, {"reader_case", rep.reader_case},
                   {"attempts", rep.attempts}};
      if (x) {
        cert["x"] = *x;
        cert["w0"] = *w0;
        cert["E"] = e_set;
      }
      rep.verdict = {direct.status, std::move(cert)};
      return rep;
    }
  }
  rep.verdict = {Status::Fail, {{"kind", "P-branch"}, {"q", ql}, {"max_r", max_r}, {"attempts", rep.attempts}}};
  return rep;
}

}  // namespace treeramsey
