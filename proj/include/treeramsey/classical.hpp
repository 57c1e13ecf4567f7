#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeramsey/framework.hpp"

namespace treeramsey {

/// Strictly increasing map [k] -> {1, 2, ...}, stored as its value list.
using Seq = std::vector<std::uint32_t>;

std::string seq_label(const Seq& s);

/// All increasing maps [k] -> [n], i.e. binom(n, k), in lexicographic order.
std::vector<Seq> increasing_maps(unsigned n, unsigned k);

/// A = X = increasing maps, a.x = a o x when the range of x lies in the domain of a.
class ClassicalBackground {
 public:
  using AElem = Seq;
  using XElem = Seq;

  /// Samples every increasing map with values at most `bound`.
  explicit ClassicalBackground(unsigned bound);

  const std::vector<Seq>& a_sample() const { return sample_; }
  const std::vector<Seq>& x_sample() const { return sample_; }
  std::optional<Seq> mult(const Seq& a, const Seq& b) const { return act(a, b); }
  std::optional<Seq> act(const Seq& a, const Seq& x) const;
  Seq trunc(const Seq& x) const;
  NormValue norm(const Seq& x) const { return NormValue::of(x.empty() ? 0 : x.back()); }
  std::string label_a(const Seq& a) const { return seq_label(a); }
  std::string label_x(const Seq& x) const { return seq_label(x); }
  unsigned bound() const { return bound_; }

 private:
  unsigned bound_;
  std::vector<Seq> sample_;
};

/// F = P = { binom(n, m) : 0 < m <= n or m = n = 0 } with binom(n,l) . binom(l,k) = binom(n,k).
/// Families with n <= maxN are premises; n = maxN + 1 is listed as a witness margin.
class ClassicalPair {
 public:
  using Background = ClassicalBackground;
  using AElem = Seq;
  using XElem = Seq;

  explicit ClassicalPair(unsigned max_n) : ClassicalPair(max_n, max_n + 1) {}
  ClassicalPair(unsigned max_n, unsigned sample_bound);

  const ClassicalBackground& background() const { return bg_; }
  const std::vector<Family<Seq>>& f_families() const { return families_; }
  const std::vector<Family<Seq>>& p_families() const { return families_; }
  std::optional<Family<Seq>> dot(const Family<Seq>& f, const Family<Seq>& p) const;
  std::optional<Family<Seq>> bullet(const Family<Seq>& f, const Family<Seq>& g) const;
  std::optional<Family<Seq>> recognize(const std::vector<Seq>& xs) const;

  static Family<Seq> binom(unsigned n, unsigned k);
  unsigned max_n() const { return max_n_; }

 private:
  unsigned max_n_;
  ClassicalBackground bg_;
  std::vector<Family<Seq>> families_;
};

/// The colored set and lines of condition (P) for F = binom(m, l), a = id on [l'],
/// P = binom(l, k) and y in dP with maximum l' (k = 2, or k = 1 when l' = 0).
ColoringProblem pigeonhole_problem(unsigned d, unsigned l, unsigned l_prime, unsigned m);

}  // namespace treeramsey
