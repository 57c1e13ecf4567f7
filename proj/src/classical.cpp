#include "treeramsey/classical.hpp"

#include <functional>

namespace treeramsey {

std::string seq_label(const Seq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

std::vector<Seq> increasing_maps(unsigned n, unsigned k) {
  std::vector<Seq> out;
  if (k > n) return out;
  Seq cur;
  std::function<void(unsigned)> rec = [&](unsigned next) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = next; v + (k - cur.size()) <= n + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

ClassicalBackground::ClassicalBackground(unsigned bound) : bound_(bound) {
  for (unsigned k = 0; k <= bound; ++k)
    for (auto& s : increasing_maps(bound, k)) sample_.push_back(std::move(s));
  sample_ = sorted_set(std::move(sample_));
}

std::optional<Seq> ClassicalBackground::act(const Seq& a, const Seq& x) const {
  if (!x.empty() && x.back() > a.size()) return std::nullopt;
  Seq out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a[x[i] - 1];
  return out;
}

Seq ClassicalBackground::trunc(const Seq& x) const {
  if (x.empty()) return x;
  return Seq(x.begin(), x.end() - 1);
}

Family<Seq> ClassicalPair::binom(unsigned n, unsigned k) {
  Family<Seq> f;
  f.name = "binom(" + std::to_string(n) + "," + std::to_string(k) + ")";
  f.elems = increasing_maps(n, k);
  f.n = static_cast<int>(n);
  f.m = static_cast<int>(k);
  return f;
}

ClassicalPair::ClassicalPair(unsigned max_n, unsigned sample_bound) : max_n_(max_n), bg_(sample_bound) {
  families_.push_back(binom(0, 0));
  for (unsigned n = 1; n <= max_n + 1; ++n)
    for (unsigned m = 1; m <= n; ++m) {
      auto f = binom(n, m);
      f.premise = n <= max_n;
      families_.push_back(std::move(f));
    }
}

std::optional<Family<Seq>> ClassicalPair::dot(const Family<Seq>& f, const Family<Seq>& p) const {
  if (f.m != p.n) return std::nullopt;
  return binom(static_cast<unsigned>(f.n), static_cast<unsigned>(p.m));
}

std::optional<Family<Seq>> ClassicalPair::bullet(const Family<Seq>& f, const Family<Seq>& g) const {
  return dot(f, g);
}

std::optional<Family<Seq>> ClassicalPair::recognize(const std::vector<Seq>& xs) const {
  if (xs.empty()) return std::nullopt;
  const auto k = static_cast<unsigned>(xs.front().size());
  unsigned n = 0;
  for (const auto& x : xs) {
    if (x.size() != k) return std::nullopt;
    if (!x.empty()) n = std::max(n, x.back());
  }
  if (k == 0 && n != 0) return std::nullopt;
  auto f = binom(n, k);
  if (f.elems != sorted_set(xs)) return std::nullopt;
  return f;
}

ColoringProblem pigeonhole_problem(unsigned d, unsigned l, unsigned l_prime, unsigned m) {
  if (l_prime >= l) throw std::invalid_argument("pigeonhole_problem needs l' < l");
  const unsigned k = l_prime == 0 ? 1 : 2;
  ClassicalBackground bg(l);
  const Seq y = l_prime == 0 ? Seq{} : Seq{l_prime};
  Seq a;
  for (unsigned i = 1; i <= l_prime; ++i) a.push_back(i);
  auto py = fiber(bg, increasing_maps(l, k), y);
  // extenders over a sample that covers the domain of a
  auto fa = extenders(bg, increasing_maps(m, l), a);
  std::vector<Seq> points;
  std::vector<std::vector<Seq>> lines;
  for (const auto& f : fa) {
    std::vector<Seq> line;
    for (const auto& x : py) line.push_back(*bg.act(f, x));
    points.insert(points.end(), line.begin(), line.end());
    lines.push_back(std::move(line));
  }
  points = sorted_set(std::move(points));
  return make_problem(points, lines, d, seq_label);
}

}  // namespace treeramsey
