#pragma once

#include <memory>
#include <string>
#include <variant>

#include "treeramsey/branch.hpp"
#include "treeramsey/classical.hpp"
#include "treeramsey/framework.hpp"
#include "treeramsey/strong.hpp"

namespace treeramsey {

enum class InstanceKind { Classical, Star, Branch, Milliken };

const char* instance_name(InstanceKind kind);
InstanceKind parse_instance(std::string_view name);

struct InstanceLimits {
  unsigned max_classical = 10;
  std::size_t max_universe_nodes = 31;
  bool unsafe = false;
};

/// Raised by build_instance when the requested bound is over the size guard.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// size_bound is maxN (classical, star, milliken) or the window level L (branch).
struct InstanceDescriptor {
  InstanceKind kind = InstanceKind::Classical;
  unsigned k = 1;
  unsigned size_bound = 0;
  unsigned max_shape = 0;
  std::variant<std::shared_ptr<const ClassicalPair>, std::shared_ptr<const StrongPair>,
               std::shared_ptr<const BranchPair>>
      pair;

  json to_json() const;
  std::size_t a_sample_size() const;
  std::size_t x_sample_size() const;
  std::size_t premise_count() const;
};

InstanceDescriptor build_instance(InstanceKind kind, unsigned k, unsigned size_bound, unsigned max_shape = 3,
                                  const InstanceLimits& limits = {});
InstanceDescriptor instance_from_json(const json& j, const InstanceLimits& limits = {});

enum class InstanceCheck { Axioms, Pointwise, A, B, Star };
InstanceCheck parse_check(std::string_view name);

Verdict check_instance(const InstanceDescriptor& inst, InstanceCheck which);

}  // namespace treeramsey
