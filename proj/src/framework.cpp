#include "treeramsey/framework.hpp"

namespace treeramsey {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Undecided: return "UNDECIDED-AT-SCALE";
  }
  return "?";
}

json problem_to_json(const ColoringProblem& prob) {
  json j = {{"points", prob.points}, {"colors", prob.colors}, {"lines", prob.lines}};
  if (!prob.labels.empty()) j["labels"] = prob.labels;
  return j;
}

ColoringProblem problem_from_json(const json& j) {
  ColoringProblem prob;
  prob.points = j.at("points").get<std::size_t>();
  prob.colors = j.at("colors").get<unsigned>();
  prob.lines = j.at("lines").get<std::vector<std::vector<std::uint32_t>>>();
  if (j.contains("labels")) prob.labels = j.at("labels").get<std::vector<std::string>>();
  prob.normalize();
  return prob;
}

json coloring_certificate(const ColoringProblem& prob, const Coloring& c) {
  json j = problem_to_json(prob);
  j["kind"] = "coloring";
  j["coloring"] = std::vector<unsigned>(c.begin(), c.end());
  return j;
}

namespace {

void walk(const json& j, ReplayResult& r) {
  if (j.is_object()) {
    if (j.value("kind", "") == "coloring") {
      ++r.certificates;
      try {
        auto prob = problem_from_json(j);
        auto raw = j.at("coloring").get<std::vector<unsigned>>();
        Coloring c;
        bool in_range = true;
        for (auto x : raw) {
          if (x >= prob.colors) in_range = false;
          c.push_back(static_cast<std::uint8_t>(x));
        }
        if (in_range && verify_avoiding(prob, c)) ++r.verified;
      } catch (const std::exception&) {
      }
    }
    for (const auto& [key, value] : j.items()) walk(value, r);
  } else if (j.is_array()) {
    for (const auto& value : j) walk(value, r);
  }
}

}  // namespace

ReplayResult replay_certificates(const json& j) {
  ReplayResult r;
  walk(j, r);
  return r;
}

Verdict composition_verdict(const OrderedTree& target, const std::vector<std::vector<NodeId>>& gs,
                            const std::vector<std::vector<NodeId>>& fs, unsigned d, const CheckOptions& opts) {
  using Img = std::vector<NodeId>;
  std::vector<Img> points;
  std::vector<std::vector<Img>> lines;
  for (const auto& g : gs) {
    std::vector<Img> line;
    for (const auto& f : fs) {
      Img y;
      for (auto v : f) y.push_back(g.at(v));
      line.push_back(y);
      points.push_back(std::move(y));
    }
    lines.push_back(std::move(line));
  }
  points = sorted_set(std::move(points));
  auto label = [&](const Img& y) {
    std::string s = "[";
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i) s += ",";
      s += "r";
      for (auto c : path_of(target, y[i])) s += std::to_string(c);
    }
    return s + "]";
  };
  if (lines.empty() || fs.empty()) {
    ColoringProblem prob;
    prob.points = points.size();
    prob.colors = d;
    for (const auto& y : points) prob.labels.push_back(label(y));
    auto cert = coloring_certificate(prob, Coloring(points.size(), 0));
    cert["reason"] = gs.empty() ? "no acting element" : "nothing to color";
    return {Status::Fail, std::move(cert)};
  }
  auto prob = make_problem(points, lines, d, label);
  if (!opts.limits.allows(prob.points, d))
    return {Status::Undecided,
            {{"kind", "scale-guard"}, {"points", prob.points}, {"colors", d}, {"limit", opts.limits.limit(d)}}};
  if (auto c = find_avoiding_coloring(prob, opts.adversary)) return {Status::Fail, coloring_certificate(prob, *c)};
  return {Status::Pass, {{"kind", "exhausted"}, {"points", prob.points}, {"lines", prob.lines.size()}}};
}

}  // namespace treeramsey
