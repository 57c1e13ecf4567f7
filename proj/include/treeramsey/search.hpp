#pragma once

#include <optional>

#include "treeramsey/embedding.hpp"
#include "treeramsey/framework.hpp"

namespace treeramsey {

struct WitnessSearch {
  Status status = Status::Undecided;
  OrderedTree v;
  unsigned height = 0;          ///< height of the returned V
  bool minimal = false;         ///< every smaller candidate height was refuted
  bool vacuous = false;         ///< nothing to color, so any V holding T works
  json report = json::object();
};

/// Scans V = T^{br(T),h}, h = ht(T), ht(T)+1, ..., max_height, for a V such that every
/// d-coloring of the S -> V maps of `flavor` leaves some g0: T -> V of the same flavor
/// with {g0 o f : f: S -> T} monochromatic. Emb and Strong run the Leaf and StrongLeaf
/// searches on S+, T+ and return V- (the leaves of the found tree removed).
WitnessSearch witness_search(const OrderedTree& s, const OrderedTree& t, unsigned d, Flavor flavor,
                             unsigned max_height, const CheckOptions& opts = {});

/// Leaf or Emb.
WitnessSearch gen_ramsey_search(const OrderedTree& s, const OrderedTree& t, unsigned d, Flavor flavor,
                                unsigned max_height, const CheckOptions& opts = {});

/// StrongLeaf or Strong; all leaves of T must have the same height.
WitnessSearch milliken_search(const OrderedTree& s, const OrderedTree& t, unsigned d, Flavor flavor,
                              unsigned max_height, const CheckOptions& opts = {});

/// Decides the single candidate V = T^{k,h} for the Leaf or StrongLeaf statement.
Verdict witness_verdict(const OrderedTree& s, const OrderedTree& t, unsigned k, unsigned h, unsigned d,
                        Flavor flavor, const CheckOptions& opts = {});

}  // namespace treeramsey
