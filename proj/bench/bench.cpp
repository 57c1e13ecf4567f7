#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include <omp.h>

#include "treeramsey/adversary.hpp"
#include "treeramsey/embedding.hpp"
#include "treeramsey/hjhl.hpp"

using namespace treeramsey;

namespace {

template <class F>
double seconds(F&& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

// colors 1..n, lines are the arithmetic progressions of length len
ColoringProblem progressions(unsigned n, unsigned len, unsigned colors) {
  ColoringProblem p;
  p.points = n;
  p.colors = colors;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned step = 1; a + (len - 1) * step < n; ++step) {
      std::vector<std::uint32_t> line;
      for (unsigned i = 0; i < len; ++i) line.push_back(a + i * step);
      p.lines.push_back(line);
    }
  p.normalize();
  return p;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-44s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);

  struct Case {
    std::string name;
    ColoringProblem prob;
  };
  std::vector<Case> cases = {
      {"adversary: 3-term APs, n=8, d=2 (avoidable)", progressions(8, 3, 2)},
      {"adversary: 3-term APs, n=9, d=2 (exhausts)", progressions(9, 3, 2)},
      {"adversary: 4-term APs, n=34, d=2 (avoidable)", progressions(34, 4, 2)},
      {"adversary: 4-term APs, n=35, d=2 (exhausts)", progressions(35, 4, 2)},
      {"adversary: 3-term APs, n=26, d=3 (avoidable)", progressions(26, 3, 3)},
      {"adversary: HJ lines, |A|=3, n=3, d=2", hj_problem(3, 1, 1, 2, 3, HJVariant::A).problem},
  };
  for (const auto& c : cases) {
    std::optional<Coloring> a, b;
    const double s = seconds([&] { a = find_avoiding_coloring_serial(c.prob); }, reps);
    const double p = seconds([&] { b = find_avoiding_coloring_parallel(c.prob); }, reps);
    row(c.name, s, p, a == b);
  }

  const std::pair<OrderedTree, OrderedTree> trees[] = {
      {regular_tree(2, 3), regular_tree(2, 6)},
      {regular_tree(2, 3), regular_tree(3, 4)},
      {tree_from_code("((())())"), regular_tree(3, 5)},
  };
  for (const auto& [s, t] : trees)
    for (auto fl : {Flavor::Emb, Flavor::Strong}) {
      std::vector<std::vector<NodeId>> a, b;
      const double se = seconds([&] { a = enumerate_images(s, t, fl); }, reps);
      const double pa = seconds([&] { b = enumerate_images_parallel(s, t, fl); }, reps);
      row(std::string("enumerate ") + flavor_name(fl) + " " + canonical_code(s) + " -> |T|=" +
              std::to_string(t.size()) + " (" + std::to_string(a.size()) + ")",
          se, pa, a == b);
    }
  return 0;
}
