#include <doctest.h>

#include "treeramsey/classical.hpp"
#include "treeramsey/framework.hpp"

using namespace treeramsey;

namespace {

// swaps the truncations of two sample points
struct CorruptedTrunc : ClassicalBackground {
  Seq p, q;
  CorruptedTrunc(unsigned bound, Seq a, Seq b) : ClassicalBackground(bound), p(std::move(a)), q(std::move(b)) {}
  Seq trunc(const Seq& x) const {
    if (x == p) return ClassicalBackground::trunc(q);
    if (x == q) return ClassicalBackground::trunc(p);
    return ClassicalBackground::trunc(x);
  }
};

Family<Seq> find_family(const ClassicalPair& pair, unsigned n, unsigned m) {
  for (const auto& f : pair.f_families())
    if (f.n == static_cast<int>(n) && f.m == static_cast<int>(m)) return f;
  throw std::logic_error("family not listed");
}

std::vector<Seq> iterate_trunc_set(const ClassicalBackground& bg, std::vector<Seq> s, unsigned t) {
  for (unsigned i = 0; i < t; ++i) s = trunc_set(bg, s);
  return s;
}

}  // namespace

TEST_CASE("norm values order bottom first") {
  CHECK(NormValue::minus_infinity() < NormValue::of(-100));
  CHECK(NormValue::minus_infinity() == NormValue::minus_infinity());
  CHECK(NormValue::of(2) < NormValue::of(3));
}

TEST_CASE("classical background satisfies the axioms") {
  ClassicalPair pair(4);
  CHECK(check_background_axioms(pair.background()).pass());
  CHECK(increasing_maps(4, 2).size() == 6);
  ClassicalPair five(5);
  CHECK(check_background_axioms(five.background()).pass());
}

TEST_CASE("corrupted truncation is caught") {
  CorruptedTrunc bg(4, Seq{1, 3}, Seq{2, 3});
  auto v = check_background_axioms(bg);
  CHECK(v.status == Status::Fail);
  CHECK(v.certificate["kind"] == "axiom");
  CHECK(v.certificate.contains("a"));
  CHECK(v.certificate.contains("x"));
}

TEST_CASE("fiber and extenders") {
  ClassicalBackground bg(5);
  auto p = increasing_maps(3, 2);
  CHECK(fiber(bg, p, Seq{1}) == std::vector<Seq>{{1, 2}, {1, 3}});
  CHECK(fiber(bg, p, Seq{3}).empty());
  std::vector<Seq> single{{2, 3}};
  CHECK(fiber(bg, single, Seq{2}) == single);

  auto f = increasing_maps(4, 3);
  CHECK(extenders(bg, f, Seq{1, 2}) == std::vector<Seq>{{1, 2, 3}, {1, 2, 4}});
  CHECK(extenders(bg, f, Seq{}) == f);
  for (const auto& a : f) {
    auto ext = extenders(bg, f, a);
    CHECK(std::find(ext.begin(), ext.end(), a) != ext.end());
  }
}

TEST_CASE("classical pair conditions") {
  ClassicalPair pair(5);
  CHECK(check_pointwise(pair).pass());
  CHECK(check_condition(pair, Condition::A).pass());
  CHECK(check_condition(pair, Condition::B).pass());
  CHECK(check_condition(pair, Condition::Star).pass());

  // the documented witness binom(n+1, l)
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned l = 2; l <= n; ++l) {
      auto g = find_B_witness(pair, find_family(pair, n, l - 1), find_family(pair, l, 2));
      REQUIRE(g);
      CHECK(g->n == static_cast<int>(n + 1));
      CHECK(g->m == static_cast<int>(l));
    }

  // dropping the witness margin breaks (B) at the boundary
  struct NoMargin : ClassicalPair {
    std::vector<Family<Seq>> fam;
    NoMargin() : ClassicalPair(5) {
      for (const auto& f : ClassicalPair::f_families())
        if (f.premise) fam.push_back(f);
    }
    const std::vector<Family<Seq>>& f_families() const { return fam; }
    const std::vector<Family<Seq>>& p_families() const { return fam; }
  };
  NoMargin tight;
  CHECK(check_condition(tight, Condition::B).status == Status::Fail);
}

TEST_CASE("check_R on the triangle problem") {
  ClassicalPair pair(6);
  auto p = find_family(pair, 3, 2);
  CHECK(check_R(pair, find_family(pair, 6, 3), p, 1).pass());
  CHECK(check_R(pair, find_family(pair, 6, 3), p, 2).pass());
  auto v = check_R(pair, find_family(pair, 5, 3), p, 2);
  REQUIRE(v.status == Status::Fail);
  CHECK(replay_certificates(v.certificate).ok());
  CHECK(replay_certificates(v.certificate).certificates == 1);
  CHECK_THROWS_AS(check_R(pair, find_family(pair, 5, 2), p, 2), std::invalid_argument);
}

TEST_CASE("check_R is antitone in F") {
  ClassicalPair pair(6);
  auto p = find_family(pair, 3, 2);
  for (unsigned n = 3; n <= 6; ++n) {
    auto f = find_family(pair, n, 3);
    auto v = check_R(pair, f, p, 2);
    // removing elements from F can only keep or lose PASS
    auto smaller = f;
    smaller.elems.pop_back();
    auto w = check_R(pair, smaller, p, 2);
    if (w.pass()) CHECK(v.pass());
  }
}

TEST_CASE("check_P on the pigeonhole illustration") {
  ClassicalPair pair(6);
  auto p = find_family(pair, 4, 2);
  const Seq y{1};
  const Seq a{1};
  auto v = check_P(pair, p, y, {{find_family(pair, 6, 4), a}}, 2);
  CHECK(v.pass());
  auto w = check_P(pair, p, y, {{find_family(pair, 5, 4), a}}, 2);
  REQUIRE(w.status == Status::Fail);
  CHECK(replay_certificates(w.certificate).ok());
  // a singleton fiber passes with any valid candidate
  auto q = find_family(pair, 2, 2);
  CHECK(check_P(pair, q, Seq{1}, {{find_family(pair, 3, 2), Seq{1}}}, 3).pass());
  // precondition problems are reported per candidate
  auto bad = check_P(pair, p, y, {{find_family(pair, 6, 3), a}, {find_family(pair, 6, 4), a}}, 2);
  CHECK(bad.pass());
  CHECK(bad.certificate["candidate"] == 1);
}

TEST_CASE("pigeonhole generator") {
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned l = 1; l <= 4; ++l)
      for (unsigned lp = 0; lp < l; ++lp) {
        auto r = minimal_parameter([&](unsigned m) { return pigeonhole_problem(d, l, lp, m); }, l, 20);
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.value == lp + d * (l - lp - 1) + 1);
      }
}

TEST_CASE("truncation depth") {
  ClassicalBackground bg(6);
  for (unsigned l = 0; l <= 5; ++l)
    for (unsigned k = (l == 0 ? 0 : 1); k <= l; ++k) {
      // binom(k, k) is already a single map
      CHECK(truncation_depth(bg, increasing_maps(l, k)) == (k < l ? k : 0));
      CHECK(iterate_trunc_set(bg, increasing_maps(l, k), k) == std::vector<Seq>{Seq{}});
    }
  CHECK(truncation_depth(bg, std::vector<Seq>{{2, 5}}) == 0);
}

TEST_CASE("lifting (P) to (P+)") {
  ClassicalPair pair(7);
  auto p_witness = [&](const Family<Seq>& q, const Seq& y) -> PCandidate<Seq> {
    // identity on [l'] and F = binom(m, l) with the pigeonhole bound for d = 2
    const unsigned l = static_cast<unsigned>(q.n);
    const unsigned lp = y.empty() ? 0 : y.back();
    const unsigned m = lp + 2 * (l - lp - 1) + 1;
    Seq a;
    for (unsigned i = 1; i <= lp; ++i) a.push_back(i);
    return {find_family(pair, std::max(m, l), l), a};
  };
  auto q = find_family(pair, 4, 3);
  auto lifted0 = lift_P_to_Pplus(pair, 0, q, Seq{1, 2}, p_witness);
  CHECK(lifted0.family.name == p_witness(q, Seq{1, 2}).family.name);
  CHECK(check_Pplus(pair, q, 0, Seq{1, 2}, lifted0.family, lifted0.a, 2).pass());

  for (const auto& x : increasing_maps(2, 1)) {
    auto lifted = lift_P_to_Pplus(pair, 1, q, x, p_witness);
    CHECK(check_Pplus(pair, q, 1, x, lifted.family, lifted.a, 2).pass());
  }
  CHECK_THROWS_AS(lift_P_to_Pplus(pair, 3, q, Seq{1}, p_witness), std::invalid_argument);
}
