#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "treeramsey/adversary.hpp"
#include "treeramsey/tree.hpp"

namespace treeramsey {

using json = nlohmann::json;

/// Value of a norm: a rank in a linear order, or the bottom element.
struct NormValue {
  bool bottom = false;
  std::int64_t rank = 0;

  static NormValue minus_infinity() { return {true, 0}; }
  static NormValue of(std::int64_t r) { return {false, r}; }

  friend std::strong_ordering operator<=>(const NormValue& a, const NormValue& b) {
    if (a.bottom || b.bottom) return static_cast<int>(!a.bottom) <=> static_cast<int>(!b.bottom);
    return a.rank <=> b.rank;
  }
  friend bool operator==(const NormValue& a, const NormValue& b) { return (a <=> b) == 0; }
  std::string str() const { return bottom ? "-inf" : std::to_string(rank); }
};

template <class B>
concept NormedBackground = requires(const B& bg, const typename B::AElem& a, const typename B::XElem& x) {
  { bg.a_sample() } -> std::convertible_to<const std::vector<typename B::AElem>&>;
  { bg.x_sample() } -> std::convertible_to<const std::vector<typename B::XElem>&>;
  { bg.mult(a, a) } -> std::same_as<std::optional<typename B::AElem>>;
  { bg.act(a, x) } -> std::same_as<std::optional<typename B::XElem>>;
  { bg.trunc(x) } -> std::same_as<typename B::XElem>;
  { bg.norm(x) } -> std::same_as<NormValue>;
  { bg.label_a(a) } -> std::convertible_to<std::string>;
  { bg.label_x(x) } -> std::convertible_to<std::string>;
};

/// A named finite set of elements. `premise` families are quantified over by
/// the condition checks; the others only serve as witnesses and results.
template <class E>
struct Family {
  std::string name;
  std::vector<E> elems;  // sorted, no duplicates
  bool premise = true;
  int kind = 0;
  int n = 0;
  int m = 0;
  std::string shape;
};

template <class E>
std::vector<E> sorted_set(std::vector<E> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class P>
concept FamilyPair = requires(const P& p, const Family<typename P::AElem>& f, const Family<typename P::XElem>& q,
                              const std::vector<typename P::XElem>& xs) {
  requires NormedBackground<typename P::Background>;
  { p.background() } -> std::convertible_to<const typename P::Background&>;
  { p.f_families() } -> std::convertible_to<const std::vector<Family<typename P::AElem>>&>;
  { p.p_families() } -> std::convertible_to<const std::vector<Family<typename P::XElem>>&>;
  { p.dot(f, q) } -> std::same_as<std::optional<Family<typename P::XElem>>>;
  { p.bullet(f, f) } -> std::same_as<std::optional<Family<typename P::AElem>>>;
  { p.recognize(xs) } -> std::same_as<std::optional<Family<typename P::XElem>>>;
};

enum class Status { Pass, Fail, Undecided };

const char* status_name(Status s);

struct Verdict {
  Status status = Status::Pass;
  json certificate = json::object();

  bool pass() const { return status == Status::Pass; }
  json to_json() const { return {{"status", status_name(status)}, {"certificate", certificate}}; }
};

/// Points, lines and a coloring, in a form that replays without the instance.
json coloring_certificate(const ColoringProblem& prob, const Coloring& c);
ColoringProblem problem_from_json(const json& j);
json problem_to_json(const ColoringProblem& prob);

struct ReplayResult {
  std::size_t certificates = 0;
  std::size_t verified = 0;
  bool ok() const { return certificates == verified; }
};
/// Re-checks every coloring certificate nested anywhere in `j`.
ReplayResult replay_certificates(const json& j);

struct CheckOptions {
  AdversaryOptions adversary;
  ScaleLimits limits;
};

// ---------------------------------------------------------------------------
// Set-level helpers

template <NormedBackground BG>
std::optional<std::vector<typename BG::XElem>> act_set(const BG& bg, const std::vector<typename BG::AElem>& fs,
                                                       const std::vector<typename BG::XElem>& xs) {
  std::vector<typename BG::XElem> out;
  out.reserve(fs.size() * xs.size());
  for (const auto& f : fs)
    for (const auto& x : xs) {
      auto y = bg.act(f, x);
      if (!y) return std::nullopt;
      out.push_back(std::move(*y));
    }
  return sorted_set(std::move(out));
}

template <NormedBackground BG>
std::vector<typename BG::XElem> trunc_set(const BG& bg, const std::vector<typename BG::XElem>& xs) {
  std::vector<typename BG::XElem> out;
  for (const auto& x : xs) out.push_back(bg.trunc(x));
  return sorted_set(std::move(out));
}

template <NormedBackground BG>
std::vector<typename BG::XElem> fiber(const BG& bg, const std::vector<typename BG::XElem>& p,
                                      const typename BG::XElem& y) {
  std::vector<typename BG::XElem> out;
  for (const auto& x : p)
    if (bg.trunc(x) == y) out.push_back(x);
  return out;
}

/// True when b extends a on the sample. A background may supply the same test in closed form.
template <NormedBackground BG>
bool extends(const BG& bg, const typename BG::AElem& b, const typename BG::AElem& a) {
  if constexpr (requires { { bg.extends(b, a) } -> std::same_as<bool>; }) return bg.extends(b, a);
  for (const auto& x : bg.x_sample()) {
    auto ax = bg.act(a, x);
    if (!ax) continue;
    auto bx = bg.act(b, x);
    if (!bx || !(*bx == *ax)) return false;
  }
  return true;
}

template <NormedBackground BG>
std::vector<typename BG::AElem> extenders(const BG& bg, const std::vector<typename BG::AElem>& fs,
                                          const typename BG::AElem& a) {
  if constexpr (requires { { bg.extends(a, a) } -> std::same_as<bool>; }) {
    std::vector<typename BG::AElem> out;
    for (const auto& f : fs)
      if (bg.extends(f, a)) out.push_back(f);
    return out;
  }
  std::vector<std::pair<const typename BG::XElem*, typename BG::XElem>> domain;
  for (const auto& x : bg.x_sample())
    if (auto ax = bg.act(a, x)) domain.emplace_back(&x, std::move(*ax));
  std::vector<typename BG::AElem> out;
  for (const auto& f : fs) {
    bool ok = true;
    for (const auto& [x, ax] : domain) {
      auto fx = bg.act(f, *x);
      if (!fx || !(*fx == ax)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(f);
  }
  return out;
}

/// Least t with a single element in the t-fold truncation of P.
template <NormedBackground BG>
std::size_t truncation_depth(const BG& bg, const std::vector<typename BG::XElem>& p) {
  if (p.empty()) throw std::invalid_argument("truncation_depth of an empty set");
  auto cur = sorted_set(p);
  for (std::size_t t = 0;; ++t) {
    if (cur.size() == 1) return t;
    auto next = trunc_set(bg, cur);
    if (next == cur) throw std::invalid_argument("truncation never reaches a single element");
    cur = std::move(next);
  }
}

template <class X, class LabelFn>
ColoringProblem make_problem(const std::vector<X>& points, const std::vector<std::vector<X>>& lines, unsigned d,
                             LabelFn&& label) {
  ColoringProblem prob;
  prob.points = points.size();
  prob.colors = d;
  for (const auto& x : points) prob.labels.push_back(label(x));
  for (const auto& line : lines) {
    std::vector<std::uint32_t> idx;
    for (const auto& x : line) {
      auto it = std::lower_bound(points.begin(), points.end(), x);
      if (it == points.end() || !(*it == x)) throw std::logic_error("line leaves the colored set");
      idx.push_back(static_cast<std::uint32_t>(it - points.begin()));
    }
    prob.lines.push_back(std::move(idx));
  }
  prob.normalize();
  return prob;
}

/// Colors F.P and asks for a monochromatic f.P: PASS when no avoiding coloring exists.
template <NormedBackground BG>
Verdict ramsey_verdict(const BG& bg, const std::vector<typename BG::AElem>& fs,
                       const std::vector<typename BG::XElem>& ps, unsigned d, const CheckOptions& opts) {
  using X = typename BG::XElem;
  std::vector<X> points;
  std::vector<std::vector<X>> lines;
  for (const auto& f : fs) {
    std::vector<X> line;
    for (const auto& x : ps) {
      auto y = bg.act(f, x);
      if (!y) throw std::logic_error("action undefined on a family product");
      line.push_back(*y);
      points.push_back(std::move(*y));
    }
    lines.push_back(std::move(line));
  }
  points = sorted_set(std::move(points));
  Verdict v;
  if (lines.empty() || ps.empty()) {
    // nothing can be monochromatic: any coloring avoids
    ColoringProblem prob;
    prob.points = points.size();
    prob.colors = d;
    for (const auto& x : points) prob.labels.push_back(bg.label_x(x));
    v.status = Status::Fail;
    v.certificate = coloring_certificate(prob, Coloring(points.size(), 0));
    v.certificate["reason"] = fs.empty() ? "no acting element" : "nothing to color";
    return v;
  }
  auto prob = make_problem(points, lines, d, [&](const X& x) { return bg.label_x(x); });
  if (!opts.limits.allows(prob.points, d)) {
    v.status = Status::Undecided;
    v.certificate = {{"kind", "scale-guard"}, {"points", prob.points}, {"colors", d},
                     {"limit", opts.limits.limit(d)}};
    return v;
  }
  if (auto c = find_avoiding_coloring(prob, opts.adversary)) {
    v.status = Status::Fail;
    v.certificate = coloring_certificate(prob, *c);
  } else {
    v.status = Status::Pass;
    v.certificate = {{"kind", "exhausted"}, {"points", prob.points}, {"lines", prob.lines.size()}};
  }
  return v;
}

/// Colors every g o f (maps given as image vectors, g into `target`) and asks
/// for a monochromatic {g o f : f in fs} for some g.
Verdict composition_verdict(const OrderedTree& target, const std::vector<std::vector<NodeId>>& gs,
                            const std::vector<std::vector<NodeId>>& fs, unsigned d, const CheckOptions& opts);

// ---------------------------------------------------------------------------
// Background axioms

template <NormedBackground BG>
Verdict check_background_axioms(const BG& bg) {
  using A = typename BG::AElem;
  using X = typename BG::XElem;
  const auto& as = bg.a_sample();
  const auto& xs = bg.x_sample();
  auto fail = [&](const char* axiom, json detail) {
    detail["kind"] = "axiom";
    detail["axiom"] = axiom;
    return Verdict{Status::Fail, std::move(detail)};
  };

  // (iii)
  for (const auto& x : xs) {
    const X dx = bg.trunc(x);
    if (bg.norm(dx) > bg.norm(x))
      return fail("(iii) |dx| <= |x|", {{"x", bg.label_x(x)}, {"dx", bg.label_x(dx)}});
  }

  // (ii) in the stronger form required of a truncation
  for (const auto& a : as)
    for (const auto& x : xs) {
      auto ax = bg.act(a, x);
      if (!ax) continue;
      const X dx = bg.trunc(x);
      auto adx = bg.act(a, dx);
      if (!adx)
        return fail("truncation: a.x defined but a.dx undefined", {{"a", bg.label_a(a)}, {"x", bg.label_x(x)}});
      if (!(bg.trunc(*ax) == *adx))
        return fail("(ii) d(a.x) = a.dx",
                    {{"a", bg.label_a(a)}, {"x", bg.label_x(x)}, {"d(a.x)", bg.label_x(bg.trunc(*ax))},
                     {"a.dx", bg.label_x(*adx)}});
    }

  // (i) associativity
  for (const auto& b : as) {
    std::vector<std::pair<const A*, A>> left;
    for (const auto& a : as)
      if (auto ab = bg.mult(a, b)) left.emplace_back(&a, std::move(*ab));
    if (left.empty()) continue;
    for (const auto& x : xs) {
      auto bx = bg.act(b, x);
      if (!bx) continue;
      for (const auto& [a, ab] : left) {
        auto l = bg.act(*a, *bx);
        auto r = bg.act(ab, x);
        if (l && r && !(*l == *r))
          return fail("(i) a.(b.x) = (ab).x", {{"a", bg.label_a(*a)}, {"b", bg.label_a(b)}, {"x", bg.label_x(x)},
                                                {"a.(b.x)", bg.label_x(*l)}, {"(ab).x", bg.label_x(*r)}});
      }
    }
  }

  // (iv) and (v), i.e. the norm law
  std::vector<std::size_t> by_norm(xs.size());
  std::vector<NormValue> norms(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    by_norm[i] = i;
    norms[i] = bg.norm(xs[i]);
  }
  std::stable_sort(by_norm.begin(), by_norm.end(), [&](std::size_t i, std::size_t j) { return norms[i] < norms[j]; });
  for (const auto& a : as) {
    std::vector<std::optional<NormValue>> image(xs.size());
    std::optional<std::size_t> top_defined;
    for (auto i : by_norm)
      if (auto ax = bg.act(a, xs[i])) {
        image[i] = bg.norm(*ax);
        top_defined = i;
      }
    if (!top_defined) continue;
    for (auto i : by_norm) {
      if (norms[i] > norms[*top_defined]) break;
      if (!image[i])
        return fail("(v) |x| <= |y| and a.y defined => a.x defined",
                    {{"a", bg.label_a(a)}, {"x", bg.label_x(xs[i])}, {"y", bg.label_x(xs[*top_defined])}});
    }
    // walk groups of equal |x|: images inside a group must agree and may not drop below earlier ones
    std::optional<std::size_t> running_max;
    for (std::size_t pos = 0; pos < by_norm.size();) {
      std::size_t end = pos;
      std::optional<std::size_t> lo, hi;
      while (end < by_norm.size() && norms[by_norm[end]] == norms[by_norm[pos]]) {
        const auto i = by_norm[end++];
        if (!image[i]) continue;
        if (!lo || *image[i] < *image[*lo]) lo = i;
        if (!hi || *image[i] > *image[*hi]) hi = i;
      }
      pos = end;
      if (!lo) continue;
      if (*image[*lo] != *image[*hi])
        return fail("(iv) |x| <= |y| => |a.x| <= |a.y|",
                    {{"a", bg.label_a(a)}, {"x", bg.label_x(xs[*hi])}, {"y", bg.label_x(xs[*lo])}});
      if (running_max && *image[*running_max] > *image[*lo])
        return fail("(iv) |x| <= |y| => |a.x| <= |a.y|",
                    {{"a", bg.label_a(a)}, {"x", bg.label_x(xs[*running_max])}, {"y", bg.label_x(xs[*lo])}});
      if (!running_max || *image[*hi] > *image[*running_max]) running_max = hi;
    }
  }
  return {Status::Pass, {{"kind", "axioms"}, {"a_sample", as.size()}, {"x_sample", xs.size()}}};
}

// ---------------------------------------------------------------------------
// Conditions on a pair of families

template <FamilyPair P>
Verdict check_pointwise(const P& pair) {
  const auto& bg = pair.background();
  for (const auto& f : pair.f_families()) {
    if (!f.premise) continue;
    for (const auto& q : pair.p_families()) {
      if (!q.premise) continue;
      auto r = pair.dot(f, q);
      if (!r) continue;
      auto pw = act_set(bg, f.elems, q.elems);
      if (!pw || *pw != r->elems)
        return {Status::Fail, {{"kind", "pointwise"}, {"operation", "dot"}, {"F", f.name}, {"P", q.name},
                               {"reason", pw ? "F.P differs from the family product" : "F.P undefined"}}};
    }
    for (const auto& g : pair.f_families()) {
      if (!g.premise) continue;
      auto h = pair.bullet(f, g);
      if (!h) continue;
      std::vector<typename P::AElem> prod;
      bool defined = true;
      for (const auto& a : f.elems)
        for (const auto& b : g.elems) {
          auto ab = bg.mult(a, b);
          if (!ab) {
            defined = false;
            break;
          }
          prod.push_back(std::move(*ab));
        }
      if (!defined || sorted_set(std::move(prod)) != h->elems)
        return {Status::Fail, {{"kind", "pointwise"}, {"operation", "bullet"}, {"F", f.name}, {"G", g.name},
                               {"reason", defined ? "F.G differs from the family product" : "F.G undefined"}}};
    }
  }
  return {Status::Pass, {{"kind", "pointwise"}}};
}

template <FamilyPair P>
Verdict check_A(const P& pair) {
  std::size_t checked = 0;
  for (const auto& q : pair.p_families()) {
    if (!q.premise) continue;
    ++checked;
    auto dq = trunc_set(pair.background(), q.elems);
    if (!pair.recognize(dq))
      return {Status::Fail, {{"kind", "condition"}, {"condition", "A"}, {"P", q.name}, {"reason", "dP is not listed"}}};
  }
  return {Status::Pass, {{"kind", "condition"}, {"condition", "A"}, {"checked", checked}}};
}

/// First listed G with G.P defined extending every element of F, if any.
template <FamilyPair P>
std::optional<Family<typename P::AElem>> find_B_witness(const P& pair, const Family<typename P::AElem>& f,
                                                        const Family<typename P::XElem>& q) {
  const auto& bg = pair.background();
  for (const auto& g : pair.f_families()) {
    if (!pair.dot(g, q)) continue;
    bool all = true;
    for (const auto& a : f.elems) {
      bool found = false;
      for (const auto& b : g.elems)
        if (extends(bg, b, a)) {
          found = true;
          break;
        }
      if (!found) {
        all = false;
        break;
      }
    }
    if (all) return g;
  }
  return std::nullopt;
}

template <FamilyPair P>
Verdict check_B(const P& pair) {
  std::size_t checked = 0;
  for (const auto& q : pair.p_families()) {
    if (!q.premise) continue;
    auto dq = pair.recognize(trunc_set(pair.background(), q.elems));
    if (!dq)
      return {Status::Fail, {{"kind", "condition"}, {"condition", "B"}, {"P", q.name}, {"reason", "dP is not listed"}}};
    for (const auto& f : pair.f_families()) {
      if (!f.premise || !pair.dot(f, *dq)) continue;
      ++checked;
      if (!find_B_witness(pair, f, q))
        return {Status::Fail, {{"kind", "condition"}, {"condition", "B"}, {"F", f.name}, {"P", q.name},
                               {"reason", "no listed G with G.P defined extends every element of F"}}};
    }
  }
  return {Status::Pass, {{"kind", "condition"}, {"condition", "B"}, {"checked", checked}}};
}

template <FamilyPair P>
Verdict check_STAR(const P& pair) {
  std::size_t checked = 0;
  for (const auto& q : pair.p_families()) {
    if (!q.premise) continue;
    for (const auto& g : pair.f_families()) {
      if (!g.premise) continue;
      auto gq = pair.dot(g, q);
      if (!gq) continue;
      for (const auto& f : pair.f_families()) {
        if (!f.premise) continue;
        auto fgq = pair.dot(f, *gq);
        if (!fgq) continue;
        ++checked;
        auto fg = pair.bullet(f, g);
        std::optional<Family<typename P::XElem>> fg_q;
        if (fg) fg_q = pair.dot(*fg, q);
        if (!fg_q)
          return {Status::Fail, {{"kind", "condition"}, {"condition", "*"}, {"F", f.name}, {"G", g.name},
                                 {"P", q.name}, {"reason", "F.(G.P) defined but (F*G).P is not"}}};
        if (fg_q->elems != fgq->elems)
          return {Status::Fail, {{"kind", "condition"}, {"condition", "*"}, {"F", f.name}, {"G", g.name},
                                 {"P", q.name}, {"reason", "F.(G.P) and (F*G).P differ"}}};
      }
    }
  }
  return {Status::Pass, {{"kind", "condition"}, {"condition", "*"}, {"checked", checked}}};
}

enum class Condition { A, B, Star };

template <FamilyPair P>
Verdict check_condition(const P& pair, Condition which) {
  switch (which) {
    case Condition::A: return check_A(pair);
    case Condition::B: return check_B(pair);
    case Condition::Star: return check_STAR(pair);
  }
  return {};
}

template <FamilyPair P>
Verdict check_R(const P& pair, const Family<typename P::AElem>& f, const Family<typename P::XElem>& q, unsigned d,
                const CheckOptions& opts = {}) {
  if (d == 0) throw std::invalid_argument("check_R needs d >= 1");
  auto r = pair.dot(f, q);
  if (!r) throw std::invalid_argument("check_R: " + f.name + " . " + q.name + " is undefined");
  auto v = ramsey_verdict(pair.background(), f.elems, q.elems, d, opts);
  v.certificate["F"] = f.name;
  v.certificate["P"] = q.name;
  return v;
}

template <class A>
struct PCandidate {
  Family<A> family;
  A a;
};

/// Verdict for the single statement "every d-coloring of F_a.Z is monochromatic on some f.Z".
template <FamilyPair P>
Verdict fiber_verdict(const P& pair, const Family<typename P::AElem>& f, const typename P::AElem& a,
                      const std::vector<typename P::XElem>& z, unsigned d, const CheckOptions& opts) {
  const auto& bg = pair.background();
  auto fa = extenders(bg, f.elems, a);
  auto v = ramsey_verdict(bg, fa, z, d, opts);
  v.certificate["F"] = f.name;
  v.certificate["a"] = bg.label_a(a);
  v.certificate["extenders"] = fa.size();
  v.certificate["fiber"] = z.size();
  return v;
}

template <FamilyPair P>
Verdict check_P(const P& pair, const Family<typename P::XElem>& q, const typename P::XElem& y,
                const std::vector<PCandidate<typename P::AElem>>& candidates, unsigned d,
                const CheckOptions& opts = {}) {
  const auto& bg = pair.background();
  auto py = fiber(bg, q.elems, y);
  json attempts = json::array();
  bool undecided = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    json attempt = {{"candidate", i}, {"F", c.family.name}, {"a", bg.label_a(c.a)}};
    if (py.empty()) {
      attempt["precondition"] = "y is not in dP";
    } else if (!pair.dot(c.family, q)) {
      attempt["precondition"] = "F.P undefined";
    } else if (!bg.act(c.a, y)) {
      attempt["precondition"] = "a.y undefined";
    } else {
      auto v = fiber_verdict(pair, c.family, c.a, py, d, opts);
      if (v.pass()) {
        v.certificate["kind"] = "P";
        v.certificate["candidate"] = i;
        v.certificate["P"] = q.name;
        v.certificate["y"] = bg.label_x(y);
        return v;
      }
      if (v.status == Status::Undecided) undecided = true;
      attempt["verdict"] = v.to_json();
    }
    attempts.push_back(std::move(attempt));
  }
  return {undecided ? Status::Undecided : Status::Fail,
          {{"kind", "P"}, {"P", q.name}, {"y", bg.label_x(y)}, {"attempts", std::move(attempts)}}};
}

template <FamilyPair P>
std::vector<typename P::XElem> iterate_trunc(const P& pair, std::vector<typename P::XElem> s, std::size_t t) {
  for (std::size_t i = 0; i < t; ++i) s = trunc_set(pair.background(), s);
  return s;
}

/// Direct test of (P+) at depth t for the given F and a.
template <FamilyPair P>
Verdict check_Pplus(const P& pair, const Family<typename P::XElem>& q, std::size_t t, const typename P::XElem& x,
                    const Family<typename P::AElem>& f, const typename P::AElem& a, unsigned d,
                    const CheckOptions& opts = {}) {
  const auto& bg = pair.background();
  if (!pair.dot(f, q)) throw std::invalid_argument("check_Pplus: F.P undefined");
  if (!bg.act(a, x)) throw std::invalid_argument("check_Pplus: a.x undefined");
  auto z = fiber(bg, iterate_trunc(pair, q.elems, t), x);
  if (z.empty()) throw std::invalid_argument("check_Pplus: x is not in the (t+1)-fold truncation of P");
  auto v = fiber_verdict(pair, f, a, z, d, opts);
  v.certificate["kind"] = "P+";
  v.certificate["t"] = t;
  return v;
}

/// Builds a (P+) witness at depth t from a (P) oracle, climbing with (B) witnesses.
template <FamilyPair P, class Oracle>
PCandidate<typename P::AElem> lift_P_to_Pplus(const P& pair, std::size_t t, const Family<typename P::XElem>& q,
                                              const typename P::XElem& x, Oracle&& p_witness) {
  const auto& bg = pair.background();
  auto deeper = iterate_trunc(pair, q.elems, t + 1);
  if (!std::binary_search(deeper.begin(), deeper.end(), x))
    throw std::invalid_argument("lift_P_to_Pplus: x is not in the (t+1)-fold truncation of P (empty fiber)");
  if (t == 0) return p_witness(q, x);
  auto dq = pair.recognize(trunc_set(bg, q.elems));
  if (!dq) throw std::runtime_error("lift_P_to_Pplus: condition (A) fails for " + q.name);
  auto inner = lift_P_to_Pplus(pair, t - 1, *dq, x, p_witness);
  auto g = find_B_witness(pair, inner.family, q);
  if (!g) throw std::runtime_error("lift_P_to_Pplus: no (B) witness for " + inner.family.name + " and " + q.name);
  return {*g, inner.a};
}

}  // namespace treeramsey
