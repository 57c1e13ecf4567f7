#include "treeramsey/search.hpp"

namespace treeramsey {

namespace {

bool equal_leaf_heights(const OrderedTree& t) {
  for (auto x : t.leaves())
    if (t.height(x) != t.height()) return false;
  return true;
}

}  // namespace

Verdict witness_verdict(const OrderedTree& s, const OrderedTree& t, unsigned k, unsigned h, unsigned d, Flavor flavor,
                        const CheckOptions& opts) {
  const auto v = regular_tree(k, h);
  const auto fs = enumerate_images(s, t, flavor);
  const auto gs = enumerate_images(t, v, flavor);
  auto verdict = composition_verdict(v, gs, fs, d, opts);
  verdict.certificate["h"] = h;
  return verdict;
}

WitnessSearch witness_search(const OrderedTree& s, const OrderedTree& t, unsigned d, Flavor flavor,
                             unsigned max_height, const CheckOptions& opts) {
  if (s.empty() || t.empty()) throw std::invalid_argument("witness search needs non-empty S and T");
  if (d == 0) throw std::invalid_argument("witness search needs d >= 1");
  const bool strong = flavor == Flavor::Strong || flavor == Flavor::StrongLeaf;
  if (strong && !equal_leaf_heights(t)) throw std::invalid_argument("all leaves of T must have the same height");

  WitnessSearch out;
  out.report = {{"kind", "witness-search"}, {"flavor", flavor_name(flavor)}, {"d", d},
                {"S", canonical_code(s)}, {"T", canonical_code(t)}, {"heights", json::array()}};
  const unsigned k = static_cast<unsigned>(t.branching());
  auto done = [&](Status st, OrderedTree v, unsigned h) {
    out.status = st;
    out.v = std::move(v);
    out.height = h;
    out.report["status"] = status_name(st);
    if (st == Status::Pass) {
      out.report["V"] = canonical_code(out.v);
      out.report["height"] = h;
      out.report["minimal"] = out.minimal;
    }
    return out;
  };
  if (d == 1 || k == 0) {
    // one color, or a one-node T: T itself works
    out.vacuous = k == 0;
    out.report["trivial"] = d == 1 ? "one color" : "one-node target";
    return done(Status::Pass, t, t.height());
  }

  const bool lifted = flavor == Flavor::Emb || flavor == Flavor::Strong;
  const Flavor inner = lifted ? (flavor == Flavor::Emb ? Flavor::Leaf : Flavor::StrongLeaf) : flavor;
  const auto s2 = lifted ? plus_minus(s, PlusMinus::Plus) : s;
  const auto t2 = lifted ? plus_minus(t, PlusMinus::Plus) : t;
  if (lifted) out.report["reduction"] = {{"S+", canonical_code(s2)}, {"T+", canonical_code(t2)}};

  if (enumerate_images(s2, t2, inner).empty()) {
    out.vacuous = true;
    out.report["trivial"] = "no map S -> T";
    return done(Status::Pass, t, t.height());
  }

  out.minimal = true;
  for (unsigned h = t2.height(); h <= max_height + (lifted ? 1 : 0); ++h) {
    auto verdict = witness_verdict(s2, t2, k, h, d, inner, opts);
    out.report["heights"].push_back(verdict.to_json());
    if (verdict.status == Status::Pass) {
      auto v = regular_tree(k, h);
      if (lifted) v = plus_minus(v, PlusMinus::Minus);
      return done(Status::Pass, v, v.height());
    }
    if (verdict.status == Status::Undecided) {
      out.minimal = false;
      out.report["largest_refuted"] = h - 1;
      return done(Status::Undecided, {}, 0);
    }
  }
  out.minimal = false;
  out.report["largest_refuted"] = max_height;
  return done(Status::Undecided, {}, 0);
}

WitnessSearch gen_ramsey_search(const OrderedTree& s, const OrderedTree& t, unsigned d, Flavor flavor,
                                unsigned max_height, const CheckOptions& opts) {
  if (flavor != Flavor::Leaf && flavor != Flavor::Emb) throw std::invalid_argument("gen_ramsey_search: LEAF or EMB");
  return witness_search(s, t, d, flavor, max_height, opts);
}

WitnessSearch milliken_search(const OrderedTree& s, const OrderedTree& t, unsigned d, Flavor flavor,
                              unsigned max_height, const CheckOptions& opts) {
  if (flavor != Flavor::StrongLeaf && flavor != Flavor::Strong)
    throw std::invalid_argument("milliken_search: STRONG_LEAF or STRONG");
  return witness_search(s, t, d, flavor, max_height, opts);
}

}  // namespace treeramsey
