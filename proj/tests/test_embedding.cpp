#include <doctest.h>

#include "treeramsey/embedding.hpp"

using namespace treeramsey;

namespace {

std::vector<OrderedTree> trees_up_to(std::size_t n) {
  std::vector<OrderedTree> all;
  for (std::size_t s = 0; s <= n; ++s)
    for (auto& t : all_ordered_trees(s)) all.push_back(t);
  return all;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const Flavor kFlavors[] = {Flavor::Emb, Flavor::Leaf, Flavor::Strong, Flavor::StrongLeaf};

}  // namespace

TEST_CASE("classify") {
  auto t = regular_tree(2, 2);
  auto id = classify(identity_map(t));
  CHECK(id.morphism);
  CHECK(id.embedding);
  CHECK(id.leaf_preserving);
  CHECK(id.strong);

  auto constant = classify(TreeMap(t, t, {0, 0, 0}));
  CHECK(constant.morphism);
  CHECK_FALSE(constant.embedding);

  auto c = classify(TreeMap(chain(2), t, {0, 1}));
  CHECK(c.embedding);
  CHECK(c.strong);
  CHECK(c.leaf_preserving);
  // the second leaf alone is not an initial segment of the root's successors
  auto second = classify(TreeMap(chain(2), t, {0, 2}));
  CHECK(second.morphism);
  CHECK_FALSE(second.embedding);

  // swapping the two leaves breaks order preservation
  CHECK_FALSE(classify(TreeMap(t, t, {0, 2, 1})).embedding);
  // second child used without the first: clause (ii)
  auto t3 = regular_tree(3, 2);
  CHECK_FALSE(classify(TreeMap(t, t3, {0, 2, 3})).embedding);
  CHECK_FALSE(classify(TreeMap(t, t3, {0, 1, 3})).embedding);
  CHECK(classify(TreeMap(t, t3, {0, 1, 2})).embedding);
}

TEST_CASE("enumerate small examples") {
  CHECK(enumerate(chain(2), chain(4), Flavor::Emb).size() == 6);
  CHECK(enumerate(chain(1), regular_tree(2, 2), Flavor::Leaf).size() == 2);
  for (auto f : kFlavors) {
    auto e = enumerate(OrderedTree{}, regular_tree(2, 2), f);
    REQUIRE(e.size() == 1);
    CHECK(e[0].image().empty());
  }
  for (std::size_t k = 0; k <= 4; ++k)
    for (std::size_t l = 0; l <= 6; ++l)
      CHECK(enumerate(chain(static_cast<unsigned>(k)), chain(static_cast<unsigned>(l)), Flavor::Emb).size() ==
            binomial(l, k));
}

TEST_CASE("enumerate matches the brute-force oracle on small trees") {
  auto small = trees_up_to(3);
  auto targets = trees_up_to(4);
  for (auto& s : small)
    for (auto& t : targets)
      for (auto f : kFlavors) {
        auto a = enumerate(s, t, f);
        auto b = enumerate_brute_force(s, t, f);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i].image() == b[i].image());
      }
}

TEST_CASE("parallel enumeration matches serial") {
  auto s = regular_tree(2, 2);
  auto t = regular_tree(2, 4);
  for (auto f : kFlavors) CHECK(enumerate_images_parallel(s, t, f) == enumerate_images(s, t, f));
}

TEST_CASE("flavor inclusions and chain domains") {
  for (auto& s : trees_up_to(3))
    for (auto& t : trees_up_to(5)) {
      auto sl = enumerate_images(s, t, Flavor::StrongLeaf);
      auto st = enumerate_images(s, t, Flavor::Strong);
      auto lp = enumerate_images(s, t, Flavor::Leaf);
      for (auto& img : sl) {
        CHECK(std::binary_search(st.begin(), st.end(), img));
        CHECK(std::binary_search(lp.begin(), lp.end(), img));
      }
    }
  for (unsigned n = 0; n <= 3; ++n)
    for (auto& t : trees_up_to(5))
      CHECK(enumerate_images(chain(n), t, Flavor::Emb) == enumerate_images(chain(n), t, Flavor::Strong));
}

TEST_CASE("order preservation via immediate successors") {
  for (auto& s : trees_up_to(5))
    for (auto& t : trees_up_to(5))
      for (auto& f : enumerate(s, t, Flavor::Emb)) CHECK(preserves_order_by_successors(f));
  auto t = regular_tree(2, 2);
  CHECK_FALSE(preserves_order_by_successors(TreeMap(t, t, {0, 2, 1})));
}

TEST_CASE("compose") {
  auto t = regular_tree(2, 2);
  auto f = TreeMap(chain(2), t, {0, 1});
  CHECK(compose(identity_map(t), f) == f);
  auto g = compose(iota(2, 2, Derivation::Star), iota(2, 1, Derivation::Star));
  CHECK(g.codomain() == regular_tree(2, 3));
  CHECK(g.image() == std::vector<NodeId>{0});
  CHECK(classify(g).strong);
  CHECK_THROWS_AS(compose(f, f), std::invalid_argument);
  for (auto& a : enumerate(chain(2), t, Flavor::Emb))
    for (auto& b : enumerate(t, regular_tree(2, 3), Flavor::Emb)) CHECK(classify(compose(b, a)).embedding);
}

TEST_CASE("restrict") {
  auto one = TreeMap(chain(1), regular_tree(2, 2), {1});
  CHECK(restrict(one, Derivation::Star).image().empty());
  auto t3 = regular_tree(2, 3);
  auto f = enumerate(chain(3), t3, Flavor::Emb).back();
  auto r = restrict(f, Derivation::Star);
  CHECK(r.domain() == chain(2));
  CHECK(r.image() == std::vector<NodeId>(f.image().begin(), f.image().begin() + 2));
  for (auto& g : enumerate(regular_tree(2, 2), t3, Flavor::Leaf)) {
    auto p = restrict(g, Derivation::Prime);
    CHECK(p.domain() == chain(2));
    CHECK(p.image() == std::vector<NodeId>{g(0), g(1)});
  }
}

TEST_CASE("iota") {
  CHECK(iota(2, 0, Derivation::Star).image().empty());
  CHECK(iota(2, 1, Derivation::Star).image() == std::vector<NodeId>{0});
  CHECK(iota(2, 1, Derivation::Prime).image() == std::vector<NodeId>{1});
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned n = 1; n <= 3; ++n) {
      auto s = iota(k, n, Derivation::Star);
      CHECK(classify(s).strong);
      for (NodeId v = 0; v < s.domain().size(); ++v) CHECK(s.domain().height(v) == s.codomain().height(s(v)));
      auto p = iota(k, n, Derivation::Prime);
      CHECK(classify(p).leaf_preserving);
      auto dl = p.domain().leaves();
      auto cl = p.codomain().leaves();
      for (std::size_t i = 0; i < dl.size(); ++i) CHECK(p(dl[i]) == cl[i]);
    }
}

TEST_CASE("factor_strong") {
  auto g = compose(iota(2, 2, Derivation::Star), iota(2, 1, Derivation::Star));
  CHECK(factor_strong(identity_map(regular_tree(2, 2)), Flavor::Strong).empty());
  auto fs = factor_strong(g, Flavor::Strong);
  REQUIRE(fs.size() == 2);
  CHECK(compose(fs[1], fs[0]).image() == g.image());

  // the map that the arbitrary-first-factor reading cannot handle
  auto last_leaf = TreeMap(regular_tree(2, 1), regular_tree(2, 3), {6});
  auto fl = factor_strong(last_leaf, Flavor::StrongLeaf);
  REQUIRE(fl.size() == 2);
  CHECK(compose(fl[1], fl[0]).image() == last_leaf.image());

  auto src = regular_tree(2, 2);
  auto dst = regular_tree(2, 4);
  for (auto fl2 : {Flavor::Strong, Flavor::StrongLeaf}) {
    for (auto& h : enumerate(src, dst, fl2)) {
      auto parts = factor_strong(h, fl2);
      REQUIRE(parts.size() == 2);
      for (auto& p : parts) CHECK(satisfies(classify(p), fl2));
      CHECK(compose(parts[1], parts[0]).image() == h.image());
    }
  }
  CHECK_THROWS_AS(factor_strong(TreeMap(chain(1), src, {0}), Flavor::StrongLeaf), std::invalid_argument);
}
