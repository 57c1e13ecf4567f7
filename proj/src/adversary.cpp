#include "treeramsey/adversary.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#include <omp.h>

namespace treeramsey {

void ColoringProblem::normalize() {
  if (colors == 0) throw std::invalid_argument("coloring problem needs at least one color");
  if (colors > 255) throw std::invalid_argument("at most 255 colors supported");
  if (!labels.empty() && labels.size() != points) throw std::invalid_argument("label count differs from point count");
  for (auto& line : lines) {
    if (line.empty()) throw std::invalid_argument("coloring problem has an empty line");
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    if (line.back() >= points) throw std::invalid_argument("line refers to a point outside the problem");
  }
}

std::size_t ScaleLimits::limit(unsigned colors) const {
  if (colors <= 1) return std::numeric_limits<std::size_t>::max();
  if (colors == 2) return max_points_d2;
  if (colors == 3) return max_points_d3;
  return std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(max_points_d3) * std::log(3.0) /
                                                           std::log(static_cast<double>(colors))));
}

bool verify_avoiding(const ColoringProblem& prob, const Coloring& c) {
  if (c.size() != prob.points) return false;
  for (auto x : c)
    if (x >= prob.colors) return false;
  for (const auto& line : prob.lines) {
    bool mono = true;
    for (auto p : line)
      if (c[p] != c[line.front()]) {
        mono = false;
        break;
      }
    if (mono && !line.empty()) return false;
  }
  return true;
}

namespace {

class Search {
 public:
  Search(const ColoringProblem& prob, Pruning pruning) : prob_(prob), pruning_(pruning), d_(prob.colors) {
    const std::size_t n = prob.points;
    point_lines_.assign(n, {});
    for (std::uint32_t l = 0; l < prob.lines.size(); ++l)
      for (auto p : prob.lines[l]) point_lines_[p].push_back(l);
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
      return point_lines_[a].size() > point_lines_[b].size();
    });
    color_.assign(n, kUnset);
    assigned_.assign(prob.lines.size(), 0);
    count_.assign(prob.lines.size() * d_, 0);
    forbid_.assign(n * d_, 0);
  }

  std::size_t points() const { return order_.size(); }
  std::uint32_t point_at(std::size_t rank) const { return order_[rank]; }

  // colors the point and propagates; false signals a monochromatic or dead line
  bool assign(std::uint32_t p, unsigned c) {
    trail_marks_.push_back(trail_.size());
    color_[p] = static_cast<std::uint8_t>(c);
    bool ok = true;
    for (auto l : point_lines_[p]) {
      const auto& line = prob_.lines[l];
      const auto size = static_cast<std::uint32_t>(line.size());
      ++assigned_[l];
      const std::uint32_t same = ++count_[l * d_ + c];
      if (same == size) {
        ok = false;
      } else if (same + 1 == size && assigned_[l] + 1 == size) {
        for (auto q : line)
          if (color_[q] == kUnset) {
            if (forbid_[q * d_ + c]++ == 0 && dead(q)) ok = false;
            trail_.push_back(q * d_ + c);
            break;
          }
      }
    }
    return ok;
  }

  void undo(std::uint32_t p) {
    const unsigned c = color_[p];
    for (auto l : point_lines_[p]) {
      --assigned_[l];
      --count_[l * d_ + c];
    }
    const std::size_t mark = trail_marks_.back();
    trail_marks_.pop_back();
    while (trail_.size() > mark) {
      --forbid_[trail_.back()];
      trail_.pop_back();
    }
    color_[p] = kUnset;
  }

  bool allowed(std::uint32_t p, unsigned c) const { return forbid_[p * d_ + c] == 0; }

  unsigned color_limit(unsigned used) const {
    return pruning_ == Pruning::Colors ? std::min(d_, used + 1) : d_;
  }

  // depth-first completion from `rank`; `used` = number of colors already in play
  bool solve(std::size_t rank, unsigned used) {
    if (rank == order_.size()) return true;
    const std::uint32_t p = order_[rank];
    for (unsigned c = 0; c < color_limit(used); ++c) {
      if (!allowed(p, c)) continue;
      if (assign(p, c) && solve(rank + 1, std::max(used, c + 1))) return true;
      undo(p);
    }
    return false;
  }

  Coloring coloring() const { return Coloring(color_.begin(), color_.end()); }

  struct Prefix {
    std::vector<std::uint8_t> colors;  // by rank
    unsigned used = 0;
  };

  void prefixes(std::size_t rank, std::size_t depth, unsigned used, std::vector<std::uint8_t>& cur,
                std::vector<Prefix>& out) {
    if (rank == depth) {
      out.push_back({cur, used});
      return;
    }
    const std::uint32_t p = order_[rank];
    for (unsigned c = 0; c < color_limit(used); ++c) {
      if (!allowed(p, c)) continue;
      if (assign(p, c)) {
        cur.push_back(static_cast<std::uint8_t>(c));
        prefixes(rank + 1, depth, std::max(used, c + 1), cur, out);
        cur.pop_back();
      }
      undo(p);
    }
  }

 private:
  static constexpr std::uint8_t kUnset = 0xff;

  bool dead(std::uint32_t q) const {
    for (unsigned c = 0; c < d_; ++c)
      if (forbid_[q * d_ + c] == 0) return false;
    return true;
  }

  const ColoringProblem& prob_;
  Pruning pruning_;
  unsigned d_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint8_t> color_;
  std::vector<std::uint32_t> assigned_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> forbid_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::size_t> trail_marks_;
};

ColoringProblem checked(const ColoringProblem& prob) {
  ColoringProblem p = prob;
  p.normalize();
  return p;
}

}  // namespace

std::optional<Coloring> find_avoiding_coloring_serial(const ColoringProblem& prob, Pruning pruning) {
  const auto p = checked(prob);
  Search s(p, pruning);
  if (s.solve(0, 0)) return s.coloring();
  return std::nullopt;
}

std::optional<Coloring> find_avoiding_coloring_parallel(const ColoringProblem& prob, Pruning pruning) {
  const auto p = checked(prob);
  Search root(p, pruning);
  const std::size_t n = root.points();
  const std::size_t want = 8 * static_cast<std::size_t>(omp_get_max_threads());
  if (n < 12) return find_avoiding_coloring_serial(p, pruning);

  std::vector<Search::Prefix> work;
  std::size_t depth = 1;
  while (true) {
    work.clear();
    std::vector<std::uint8_t> cur;
    root.prefixes(0, depth, 0, cur, work);
    if (work.size() >= want || depth + 1 >= n / 2 || work.empty()) break;
    ++depth;
  }

  const auto tasks = static_cast<long>(work.size());
  std::atomic<long> best{tasks};
  std::vector<Coloring> results(work.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < tasks; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    Search s(p, pruning);
    const auto& pre = work[static_cast<std::size_t>(i)];
    bool ok = true;
    for (std::size_t r = 0; r < pre.colors.size() && ok; ++r) ok = s.assign(s.point_at(r), pre.colors[r]);
    if (!ok || !s.solve(pre.colors.size(), pre.used)) continue;
    results[static_cast<std::size_t>(i)] = s.coloring();
    long seen = best.load();
    while (i < seen && !best.compare_exchange_weak(seen, i)) {
    }
  }
  const long b = best.load();
  if (b == tasks) return std::nullopt;
  return results[static_cast<std::size_t>(b)];
}

std::optional<Coloring> find_avoiding_coloring(const ColoringProblem& prob, const AdversaryOptions& opts) {
  return opts.parallel ? find_avoiding_coloring_parallel(prob, opts.pruning)
                       : find_avoiding_coloring_serial(prob, opts.pruning);
}

std::optional<Coloring> exhaustive_avoiding_coloring(const ColoringProblem& prob) {
  const auto p = checked(prob);
  const std::size_t n = p.points;
  const double states = std::pow(static_cast<double>(p.colors), static_cast<double>(n));
  if (states > std::ldexp(1.0, 30)) throw ScaleGuardExceeded("exhaustive enumeration beyond 2^30 colorings");

  Coloring c(n, 0);
  if (p.colors == 1) {
    if (verify_avoiding(p, c)) return c;
    return std::nullopt;
  }
  if (p.colors == 2) {
    std::vector<std::vector<std::uint32_t>> point_lines(n);
    for (std::uint32_t l = 0; l < p.lines.size(); ++l)
      for (auto q : p.lines[l]) point_lines[q].push_back(l);
    std::vector<std::uint32_t> ones(p.lines.size(), 0);
    auto mono = [&](std::uint32_t l) { return ones[l] == 0 || ones[l] == p.lines[l].size(); };
    std::size_t mono_lines = p.lines.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 0;; ++step) {
      if (mono_lines == 0) return c;
      if (step + 1 == total) break;
      // Gray code: flip the lowest set bit of step + 1
      const auto q = static_cast<std::size_t>(__builtin_ctzll(step + 1));
      for (auto l : point_lines[q]) {
        if (mono(l)) --mono_lines;
        ones[l] += c[q] ? -1u : 1u;
        if (mono(l)) ++mono_lines;
      }
      c[q] ^= 1;
    }
    return std::nullopt;
  }
  while (true) {
    if (verify_avoiding(p, c)) return c;
    std::size_t i = 0;
    while (i < n && c[i] + 1u == p.colors) c[i++] = 0;
    if (i == n) return std::nullopt;
    ++c[i];
  }
}

MinimalParameterResult minimal_parameter(const std::function<ColoringProblem(unsigned)>& gen, unsigned lo,
                                         unsigned hi, const ScaleLimits& limits, const AdversaryOptions& opts) {
  MinimalParameterResult out;
  for (unsigned n = lo; n <= hi; ++n) {
    auto prob = gen(n);
    prob.normalize();
    if (!limits.allows(prob.points, prob.colors)) {
      out.note = "parameter " + std::to_string(n) + " has " + std::to_string(prob.points) +
                 " points, beyond the scale guard";
      return out;
    }
    auto c = find_avoiding_coloring(prob, opts);
    if (!c) {
      out.status = SearchStatus::Found;
      out.value = n;
      return out;
    }
    out.refutations.push_back({n, std::move(prob), std::move(*c)});
  }
  out.note = "no passing parameter up to " + std::to_string(hi);
  return out;
}

}  // namespace treeramsey
