#include <doctest.h>

#include <set>

#include "treeramsey/search.hpp"

using namespace treeramsey;

namespace {

// every d-coloring of the maps S -> V, looking for one with no monochromatic {g o f}
bool brute_witness(const OrderedTree& s, const OrderedTree& t, const OrderedTree& v, unsigned d, Flavor flavor) {
  const auto fs = enumerate_brute_force(s, t, flavor);
  const auto gs = enumerate_brute_force(t, v, flavor);
  std::vector<std::vector<NodeId>> pts;
  for (const auto& x : enumerate_brute_force(s, v, flavor)) pts.push_back(x.image());
  std::vector<std::vector<std::size_t>> lines;
  for (const auto& g : gs) {
    std::vector<std::size_t> line;
    for (const auto& f : fs) {
      const auto img = compose(g, f).image();
      line.push_back(static_cast<std::size_t>(std::find(pts.begin(), pts.end(), img) - pts.begin()));
    }
    lines.push_back(line);
  }
  if (lines.empty()) return false;
  if (fs.empty()) return true;
  std::vector<unsigned> c(pts.size(), 0);
  while (true) {
    bool some_mono = false;
    for (const auto& line : lines) {
      bool mono = true;
      for (auto p : line) mono = mono && c[p] == c[line.front()];
      some_mono = some_mono || mono;
    }
    if (!some_mono) return false;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == d) c[i++] = 0;
    if (i == c.size()) return true;
  }
}

}  // namespace

TEST_CASE("one point sets pass at the height of T") {
  auto res = gen_ramsey_search(chain(1), chain(2), 2, Flavor::Leaf, 5);
  CHECK(res.status == Status::Pass);
  CHECK(res.v == chain(2));
  CHECK(res.minimal);
}

TEST_CASE("embeddings of a point into a 2-chain need the 3-chain") {
  auto res = gen_ramsey_search(chain(1), chain(2), 2, Flavor::Emb, 5);
  REQUIRE(res.status == Status::Pass);
  CHECK(res.v == chain(3));
  CHECK(res.minimal);
  CHECK(res.report["heights"].size() == 2);
  CHECK(res.report["heights"][0]["status"] == "FAIL");
  CHECK(replay_certificates(res.report).ok());
}

TEST_CASE("strong searches") {
  auto leaf = milliken_search(chain(1), chain(2), 2, Flavor::StrongLeaf, 5);
  CHECK(leaf.status == Status::Pass);
  CHECK(leaf.height == 2);
  auto strong = milliken_search(chain(1), chain(2), 2, Flavor::Strong, 5);
  REQUIRE(strong.status == Status::Pass);
  CHECK(strong.height == 3);
  CHECK(strong.minimal);
  CHECK_THROWS_AS(milliken_search(chain(1), tree_from_code("((())())"), 2, Flavor::Strong, 4), std::invalid_argument);
  CHECK_THROWS_AS(milliken_search(chain(1), chain(2), 2, Flavor::Leaf, 4), std::invalid_argument);
  CHECK_THROWS_AS(gen_ramsey_search(chain(1), chain(2), 2, Flavor::Strong, 4), std::invalid_argument);
}

TEST_CASE("d = 1 and empty map sets") {
  auto one = gen_ramsey_search(chain(2), regular_tree(2, 2), 1, Flavor::Leaf, 4);
  CHECK(one.status == Status::Pass);
  CHECK(one.v == regular_tree(2, 2));
  auto none = gen_ramsey_search(regular_tree(2, 2), chain(3), 2, Flavor::Leaf, 4);
  CHECK(none.status == Status::Pass);
  CHECK(none.vacuous);
}

TEST_CASE("candidate verdicts agree with a brute-force oracle") {
  struct Case {
    const char* s;
    const char* t;
    unsigned k;
    unsigned h;
    Flavor fl;
  };
  const Case cases[] = {
      {"()", "(()())", 2, 2, Flavor::Leaf},       {"()", "(()())", 2, 3, Flavor::Leaf},
      {"(())", "((())())", 2, 3, Flavor::Leaf},   {"()", "(()())", 2, 2, Flavor::StrongLeaf},
      {"()", "(()())", 2, 3, Flavor::StrongLeaf}, {"(())", "((()))", 1, 4, Flavor::Leaf},
      {"(())", "((()))", 1, 5, Flavor::Leaf},     {"(())", "((()))", 1, 5, Flavor::StrongLeaf},
  };
  for (const auto& c : cases) {
    const auto s = tree_from_code(c.s);
    const auto t = tree_from_code(c.t);
    CAPTURE(c.s);
    CAPTURE(c.t);
    CAPTURE(c.h);
    CheckOptions exhaustive;
    exhaustive.adversary.pruning = Pruning::None;
    auto v = witness_verdict(s, t, c.k, c.h, 2, c.fl, exhaustive);
    REQUIRE(v.status != Status::Undecided);
    CHECK(v.pass() == brute_witness(s, t, regular_tree(c.k, c.h), 2, c.fl));
  }
}

TEST_CASE("returned witnesses re-verify with the unpruned adversary") {
  CheckOptions exhaustive;
  exhaustive.adversary.pruning = Pruning::None;
  for (auto fl : {Flavor::Leaf, Flavor::Emb}) {
    for (const auto& [s, t] : std::vector<std::pair<std::string, std::string>>{
             {"()", "(())"}, {"()", "(()())"}, {"(())", "((()))"}}) {
      CAPTURE(s);
      CAPTURE(t);
      auto res = gen_ramsey_search(tree_from_code(s), tree_from_code(t), 2, fl, 6);
      if (res.status != Status::Pass || res.vacuous) continue;
      const bool lifted = fl == Flavor::Emb;
      auto s2 = tree_from_code(s), t2 = tree_from_code(t);
      if (lifted) {
        s2 = plus_minus(s2, PlusMinus::Plus);
        t2 = plus_minus(t2, PlusMinus::Plus);
      }
      const auto inner = lifted ? Flavor::Leaf : fl;
      const unsigned h = res.height + (lifted ? 1 : 0);
      auto again = witness_verdict(s2, t2, static_cast<unsigned>(t2.branching()), h, 2, inner, exhaustive);
      CHECK(again.pass());
      if (res.minimal && h > t2.height()) {
        auto below = witness_verdict(s2, t2, static_cast<unsigned>(t2.branching()), h - 1, 2, inner, exhaustive);
        CHECK(below.status == Status::Fail);
      }
    }
  }
}

TEST_CASE("embeddings are the restrictions of leaf preserving maps of the plus trees") {
  // old node v sits at v + (leaves before v) in the plus tree
  auto plus_index = [](const OrderedTree& t) {
    std::vector<NodeId> at;
    NodeId shift = 0;
    for (NodeId v = 0; v < t.size(); ++v) {
      at.push_back(v + shift);
      shift += t.is_leaf(v);
    }
    return at;
  };
  auto restrictions = [&](const OrderedTree& s, const OrderedTree& t, const std::vector<std::vector<NodeId>>& maps) {
    const auto sa = plus_index(s);
    const auto ta = plus_index(t);
    std::set<std::vector<NodeId>> out;
    for (const auto& m : maps) {
      std::vector<NodeId> r;
      for (NodeId v = 0; v < s.size(); ++v) {
        const auto it = std::find(ta.begin(), ta.end(), m[sa[v]]);
        REQUIRE(it != ta.end());
        r.push_back(static_cast<NodeId>(it - ta.begin()));
      }
      out.insert(r);
    }
    return out;
  };
  auto equal_heights = [](const OrderedTree& t) {
    for (auto x : t.leaves())
      if (t.height(x) != t.height()) return false;
    return true;
  };
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b)
      for (const auto& s : all_ordered_trees(a))
        for (const auto& t : all_ordered_trees(b)) {
          CAPTURE(canonical_code(s));
          CAPTURE(canonical_code(t));
          const auto sp = plus_minus(s, PlusMinus::Plus);
          const auto tp = plus_minus(t, PlusMinus::Plus);
          auto emb = enumerate_images(s, t, Flavor::Emb);
          auto lift = restrictions(s, t, enumerate_images(sp, tp, Flavor::Leaf));
          CHECK(std::set<std::vector<NodeId>>(emb.begin(), emb.end()) == lift);
          if (!equal_heights(t)) continue;
          auto st = enumerate_images(s, t, Flavor::Strong);
          auto slift = restrictions(s, t, enumerate_images(sp, tp, Flavor::StrongLeaf));
          CHECK(std::set<std::vector<NodeId>>(st.begin(), st.end()) == slift);
        }
}
