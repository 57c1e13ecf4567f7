#include <doctest.h>

#include <random>

#include "treeramsey/adversary.hpp"

using namespace treeramsey;

namespace {

// edges of K_n as points, triangles as lines
ColoringProblem triangles(unsigned n) {
  ColoringProblem p;
  std::vector<std::vector<std::uint32_t>> id(n, std::vector<std::uint32_t>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) id[i][j] = static_cast<std::uint32_t>(p.points++);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      for (unsigned c = b + 1; c < n; ++c) p.lines.push_back({id[a][b], id[a][c], id[b][c]});
  p.colors = 2;
  return p;
}

ColoringProblem random_problem(std::mt19937& rng, std::size_t points, std::size_t lines, unsigned colors) {
  ColoringProblem p;
  p.points = points;
  p.colors = colors;
  std::uniform_int_distribution<std::size_t> len(1, 4);
  std::uniform_int_distribution<std::uint32_t> pt(0, static_cast<std::uint32_t>(points - 1));
  for (std::size_t i = 0; i < lines; ++i) {
    std::vector<std::uint32_t> l;
    const auto k = len(rng);
    for (std::size_t j = 0; j < k; ++j) l.push_back(pt(rng));
    p.lines.push_back(l);
  }
  p.normalize();
  return p;
}

}  // namespace

TEST_CASE("single line of two points") {
  ColoringProblem p;
  p.points = 2;
  p.lines = {{0, 1}};
  auto c = find_avoiding_coloring(p);
  REQUIRE(c);
  CHECK(*c == Coloring{0, 1});
}

TEST_CASE("K6 forces a monochromatic triangle, K5 does not") {
  auto k6 = triangles(6);
  CHECK(k6.points == 15);
  CHECK(k6.lines.size() == 20);
  CHECK_FALSE(find_avoiding_coloring(k6));
  CHECK_FALSE(exhaustive_avoiding_coloring(k6));

  auto k5 = triangles(5);
  auto c = find_avoiding_coloring(k5);
  REQUIRE(c);
  CHECK(verify_avoiding(k5, *c));
  // every vertex has two edges of each color: the pentagon and the pentagram
  std::vector<std::array<int, 2>> deg(5, {0, 0});
  std::uint32_t e = 0;
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j, ++e) {
      ++deg[i][(*c)[e]];
      ++deg[j][(*c)[e]];
    }
  for (auto& d : deg) CHECK(d == std::array<int, 2>{2, 2});
  CHECK(exhaustive_avoiding_coloring(k5));
}

TEST_CASE("verify_avoiding") {
  ColoringProblem p;
  p.points = 3;
  CHECK(verify_avoiding(p, {0, 0, 0}));
  p.lines = {{0, 2}};
  CHECK_FALSE(verify_avoiding(p, {1, 1, 1}));
  CHECK(verify_avoiding(p, {1, 1, 0}));
  CHECK_FALSE(verify_avoiding(p, {1, 1}));
}

TEST_CASE("invalid problems") {
  ColoringProblem p;
  p.points = 2;
  p.lines = {{}};
  CHECK_THROWS_AS(find_avoiding_coloring(p), std::invalid_argument);
  p.lines = {{2}};
  CHECK_THROWS_AS(find_avoiding_coloring(p), std::invalid_argument);
}

TEST_CASE("backtracker agrees with full enumeration") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 19;
    const unsigned d = trial % 5 == 0 ? 3 : 2;
    auto p = random_problem(rng, n, n + trial % 23, d);
    if (d == 3 && n > 12) continue;
    auto fast = find_avoiding_coloring(p);
    auto slow = exhaustive_avoiding_coloring(p);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(verify_avoiding(p, *fast));
    auto unpruned = find_avoiding_coloring_serial(p, Pruning::None);
    REQUIRE(unpruned.has_value() == fast.has_value());
    // the least coloring in search order is canonical, so pruning does not change it
    if (fast) CHECK(*unpruned == *fast);
    auto par = find_avoiding_coloring_parallel(p);
    REQUIRE(par.has_value() == fast.has_value());
    if (fast) CHECK(*par == *fast);
  }
}

TEST_CASE("parallel kernel on larger problems") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_problem(rng, 24, 60 + trial, 2);
    auto a = find_avoiding_coloring_serial(p);
    auto b = find_avoiding_coloring_parallel(p);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(*a == *b);
  }
  auto k6 = triangles(6);
  CHECK_FALSE(find_avoiding_coloring_parallel(k6));
}

TEST_CASE("minimal_parameter") {
  ColoringProblem always;
  always.points = 1;
  always.lines = {{0}};
  auto r = minimal_parameter([&](unsigned) { return always; }, 3, 10);
  CHECK(r.status == SearchStatus::Found);
  CHECK(r.value == 3);
  CHECK(r.refutations.empty());

  auto ramsey = minimal_parameter(triangles, 3, 8);
  REQUIRE(ramsey.status == SearchStatus::Found);
  CHECK(ramsey.value == 6);
  REQUIRE(ramsey.refutations.size() == 3);
  CHECK(ramsey.refutations.back().parameter == 5);
  for (auto& ref : ramsey.refutations) CHECK(verify_avoiding(ref.problem, ref.coloring));

  ScaleLimits tight;
  tight.max_points_d2 = 9;
  auto stopped = minimal_parameter(triangles, 3, 8, tight);
  CHECK(stopped.status == SearchStatus::Undecided);
  CHECK(stopped.refutations.size() == 2);
}

TEST_CASE("scale limits") {
  ScaleLimits l;
  CHECK(l.limit(2) == 25);
  CHECK(l.limit(3) == 16);
  CHECK(l.allows(1000, 1));
  CHECK_FALSE(l.allows(26, 2));
  l.unsafe = true;
  CHECK(l.allows(26, 2));
}
