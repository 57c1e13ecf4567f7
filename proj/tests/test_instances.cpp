#include <doctest.h>

#include "treeramsey/instances.hpp"

using namespace treeramsey;

namespace {

// the branch background with the norm replaced by the smallest image point
struct MinNormBranch {
  using AElem = BranchMap;
  using XElem = BranchPlacement;
  const BranchBackground& bg;

  const std::vector<BranchMap>& a_sample() const { return bg.a_sample(); }
  const std::vector<BranchPlacement>& x_sample() const { return bg.x_sample(); }
  std::optional<BranchMap> mult(const BranchMap& a, const BranchMap& b) const { return bg.mult(a, b); }
  std::optional<BranchPlacement> act(const BranchMap& a, const BranchPlacement& x) const { return bg.act(a, x); }
  BranchPlacement trunc(const BranchPlacement& x) const { return bg.trunc(x); }
  NormValue norm(const BranchPlacement& x) const {
    if (x.image.empty()) return NormValue::minus_infinity();
    return NormValue::of(*std::min_element(x.image.begin(), x.image.end()));
  }
  std::string label_a(const BranchMap& a) const { return bg.label_a(a); }
  std::string label_x(const BranchPlacement& x) const { return bg.label_x(x); }
};

}  // namespace

TEST_CASE("every instance passes the axioms and pointwise-ness at default bounds") {
  const std::pair<InstanceKind, unsigned> kinds[] = {
      {InstanceKind::Classical, 4}, {InstanceKind::Star, 2}, {InstanceKind::Milliken, 2}, {InstanceKind::Branch, 3}};
  for (auto [kind, bound] : kinds) {
    CAPTURE(instance_name(kind));
    auto inst = build_instance(kind, 2, bound);
    CHECK(check_instance(inst, InstanceCheck::Axioms).pass());
    CHECK(check_instance(inst, InstanceCheck::Pointwise).pass());
    CHECK(inst.premise_count() > 0);
  }
}

TEST_CASE("classical maxN = 4 holds the six maps [2] -> [4]") {
  auto inst = build_instance(InstanceKind::Classical, 1, 4);
  const auto& pair = *std::get<std::shared_ptr<const ClassicalPair>>(inst.pair);
  std::size_t count = 0;
  for (const auto& x : pair.background().x_sample()) count += x.size() == 2 && x.back() <= 4;
  CHECK(count == 6);
}

TEST_CASE("star truncation of binom(T^2, m)") {
  auto inst = build_instance(InstanceKind::Star, 2, 2);
  const auto& pair = *std::get<std::shared_ptr<const StrongPair>>(inst.pair);
  for (unsigned m = 2; m <= 2; ++m) {
    auto p = pair.p_family(kPlain, 2, chain(m));
    auto d = trunc_set(pair.background(), p.elems);
    auto want = pair.p_family(kPlain, 1, chain(m - 1));
    CHECK(d == want.elems);
  }
}

TEST_CASE("branch empty function has norm -inf") {
  auto inst = build_instance(InstanceKind::Branch, 2, 3);
  const auto& pair = *std::get<std::shared_ptr<const BranchPair>>(inst.pair);
  CHECK(pair.background().norm(BranchPlacement{"", {}}).bottom);
}

TEST_CASE("a min-image norm breaks the branch axioms") {
  BranchBackground bg(2, 3, 3);
  MinNormBranch bad{bg};
  CHECK(check_background_axioms(bg).pass());
  CHECK(check_background_axioms(bad).status == Status::Fail);
}

TEST_CASE("size guard and json descriptors") {
  CHECK_THROWS_AS(build_instance(InstanceKind::Classical, 1, 11), InstanceTooLarge);
  CHECK_THROWS_AS(build_instance(InstanceKind::Star, 2, 5), InstanceTooLarge);
  CHECK_THROWS_AS(build_instance(InstanceKind::Branch, 2, 6), InstanceTooLarge);
  CHECK_THROWS_AS(build_instance(InstanceKind::Star, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("nope"), std::invalid_argument);
  CHECK(parse_instance("milliken") == InstanceKind::Milliken);

  auto inst = build_instance(InstanceKind::Milliken, 2, 2);
  auto j = inst.to_json();
  CHECK(j["kind"] == "MILLIKEN");
  auto again = instance_from_json(j);
  CHECK(again.to_json() == j);
}
