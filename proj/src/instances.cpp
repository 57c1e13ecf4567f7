#include "treeramsey/instances.hpp"

namespace treeramsey {

namespace {

std::size_t regular_size(unsigned k, unsigned n) {
  std::size_t total = 0, level = 1;
  for (unsigned h = 0; h < n; ++h) {
    total += level;
    level *= k;
    if (total > (1u << 20)) break;
  }
  return total;
}

}  // namespace

const char* instance_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Classical: return "CLASSICAL";
    case InstanceKind::Star: return "STAR";
    case InstanceKind::Branch: return "BRANCH";
    case InstanceKind::Milliken: return "MILLIKEN";
  }
  return "?";
}

InstanceKind parse_instance(std::string_view name) {
  for (auto k : {InstanceKind::Classical, InstanceKind::Star, InstanceKind::Branch, InstanceKind::Milliken}) {
    std::string want = instance_name(k);
    if (name.size() == want.size() &&
        std::equal(name.begin(), name.end(), want.begin(), [](char a, char b) { return std::toupper(a) == b; }))
      return k;
  }
  throw std::invalid_argument("unknown instance kind: " + std::string(name));
}

InstanceCheck parse_check(std::string_view name) {
  if (name == "AXIOMS" || name == "axioms") return InstanceCheck::Axioms;
  if (name == "POINTWISE" || name == "pointwise") return InstanceCheck::Pointwise;
  if (name == "A") return InstanceCheck::A;
  if (name == "B") return InstanceCheck::B;
  if (name == "STAR" || name == "star" || name == "*") return InstanceCheck::Star;
  throw std::invalid_argument("unknown condition: " + std::string(name));
}

InstanceDescriptor build_instance(InstanceKind kind, unsigned k, unsigned size_bound, unsigned max_shape,
                                  const InstanceLimits& limits) {
  InstanceDescriptor d;
  d.kind = kind;
  d.k = k;
  d.size_bound = size_bound;
  d.max_shape = max_shape;
  if (kind == InstanceKind::Classical) {
    if (!limits.unsafe && size_bound > limits.max_classical)
      throw InstanceTooLarge("classical maxN " + std::to_string(size_bound) + " exceeds " +
                             std::to_string(limits.max_classical));
    d.k = 1;
    d.max_shape = 0;
    d.pair = std::make_shared<const ClassicalPair>(size_bound);
    return d;
  }
  if (k < 1) throw std::invalid_argument("tree instances need k >= 1");
  if (size_bound < 1) throw std::invalid_argument("tree instances need a size bound >= 1");
  if (max_shape < 1) throw std::invalid_argument("shape bound must be >= 1");
  const unsigned top = kind == InstanceKind::Branch ? size_bound : size_bound + 1;
  const auto nodes = regular_size(k, top);
  if (!limits.unsafe && nodes > limits.max_universe_nodes)
    throw InstanceTooLarge("universe T^{" + std::to_string(k) + "," + std::to_string(top) + "} has " +
                           std::to_string(nodes) + " nodes, over the limit of " +
                           std::to_string(limits.max_universe_nodes));
  switch (kind) {
    case InstanceKind::Star:
      d.pair = std::make_shared<const StrongPair>(ShapeMode::Chains, k, size_bound, max_shape);
      break;
    case InstanceKind::Milliken:
      d.pair = std::make_shared<const StrongPair>(ShapeMode::Trees, k, size_bound, max_shape);
      break;
    case InstanceKind::Branch:
      d.pair = std::make_shared<const BranchPair>(k, size_bound, max_shape);
      break;
    default: break;
  }
  return d;
}

std::size_t InstanceDescriptor::a_sample_size() const {
  return std::visit([](const auto& p) { return p->background().a_sample().size(); }, pair);
}

std::size_t InstanceDescriptor::x_sample_size() const {
  return std::visit([](const auto& p) { return p->background().x_sample().size(); }, pair);
}

std::size_t InstanceDescriptor::premise_count() const {
  return std::visit(
      [](const auto& p) {
        std::size_t c = 0;
        for (const auto& f : p->f_families()) c += f.premise;
        for (const auto& q : p->p_families()) c += q.premise;
        return c;
      },
      pair);
}

json InstanceDescriptor::to_json() const {
  json j = {{"kind", instance_name(kind)}, {"k", k}, {"size_bound", size_bound}};
  if (kind != InstanceKind::Classical) j["max_shape"] = max_shape;
  j["samples"] = {{"A", a_sample_size()}, {"X", x_sample_size()}};
  std::visit(
      [&](const auto& p) {
        json fs = json::array(), ps = json::array();
        for (const auto& f : p->f_families())
          fs.push_back({{"name", f.name}, {"size", f.elems.size()}, {"premise", f.premise}});
        for (const auto& q : p->p_families())
          ps.push_back({{"name", q.name}, {"size", q.elems.size()}, {"premise", q.premise}});
        j["F"] = fs;
        j["P"] = ps;
      },
      pair);
  return j;
}

InstanceDescriptor instance_from_json(const json& j, const InstanceLimits& limits) {
  const auto kind = parse_instance(j.at("kind").get<std::string>());
  return build_instance(kind, j.value("k", 1u), j.at("size_bound").get<unsigned>(), j.value("max_shape", 3u),
                        limits);
}

Verdict check_instance(const InstanceDescriptor& inst, InstanceCheck which) {
  return std::visit(
      [&](const auto& p) -> Verdict {
        switch (which) {
          case InstanceCheck::Axioms: return check_background_axioms(p->background());
          case InstanceCheck::Pointwise: return check_pointwise(*p);
          case InstanceCheck::A: return check_A(*p);
          case InstanceCheck::B: return check_B(*p);
          case InstanceCheck::Star: return check_STAR(*p);
        }
        return {};
      },
      inst.pair);
}

}  // namespace treeramsey
