#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <sstream>

#include "treeramsey/hjhl.hpp"
#include "treeramsey/instances.hpp"
#include "treeramsey/io.hpp"
#include "treeramsey/search.hpp"

namespace treeramsey::cli {

namespace {

struct Common {
  bool json_out = false;
  std::string certificate;
  std::size_t max_points = 0;
  std::string prune = "colors";
  bool unsafe = false;
  bool parallel = false;

  CheckOptions options() const {
    CheckOptions o;
    if (max_points) o.limits.max_points_d2 = o.limits.max_points_d3 = max_points;
    o.limits.unsafe = unsafe;
    o.adversary.pruning = prune == "none" ? Pruning::None : Pruning::Colors;
    o.adversary.parallel = parallel;
    return o;
  }
  json engine() const {
    const auto o = options();
    return {{"max_points_d2", o.limits.max_points_d2}, {"max_points_d3", o.limits.max_points_d3},
            {"unsafe_scale", unsafe}, {"pruning", prune}, {"parallel", parallel}};
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json_out, "print the full JSON report");
  app->add_option("--certificate", c.certificate, "write the JSON report to this path");
  app->add_option("--max-points", c.max_points, "largest colored set the adversary accepts");
  app->add_option("--prune", c.prune, "symmetry pruning")->check(CLI::IsMember({"colors", "none"}));
  app->add_flag("--unsafe-scale", c.unsafe, "lift every size guard");
  app->add_flag("--parallel", c.parallel, "parallel adversary");
}

std::pair<unsigned, unsigned> parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument(std::string(what) + " must be n,m");
  return {static_cast<unsigned>(std::stoul(s.substr(0, comma))), static_cast<unsigned>(std::stoul(s.substr(comma + 1)))};
}

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  return out;
}

int exit_for(Status s) {
  switch (s) {
    case Status::Pass: return kPass;
    case Status::Fail: return kFail;
    case Status::Undecided: return kUndecided;
  }
  return kUsage;
}

Flavor flavor_arg(const std::string& s) { return parse_flavor(s); }

std::string status_text(Status s) { return s == Status::Undecided ? "UNDECIDED-AT-SCALE" : status_name(s); }

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::string s, t, flavor = "EMB";
  bool list = false;
};

json cmd_enumerate(const EnumerateArgs& a, Status& status, std::string& summary) {
  const auto s = parse_tree_arg(a.s);
  const auto t = parse_tree_arg(a.t);
  const auto fl = flavor_arg(a.flavor);
  const auto images = enumerate_images(s, t, fl);
  json r = {{"S", canonical_code(s)}, {"T", canonical_code(t)}, {"flavor", flavor_name(fl)}, {"count", images.size()}};
  if (a.list) r["images"] = images;
  status = Status::Pass;
  summary = "count: " + std::to_string(images.size());
  return r;
}

struct VerifyArgs {
  std::string instance, condition;
  unsigned k = 2, bound = 3, max_shape = 3, d = 2;
  std::string f, p, shape = "()", kind = "plain", y, f0;
  unsigned q = 0, p_len = 0, level = 0, f0_index = 0, max_r = 6;
};

Family<Seq> classical_family(const ClassicalPair& pair, std::pair<unsigned, unsigned> nm) {
  for (const auto& f : pair.f_families())
    if (f.n == static_cast<int>(nm.first) && f.m == static_cast<int>(nm.second)) return f;
  return ClassicalPair::binom(nm.first, nm.second);
}

json cmd_verify(const VerifyArgs& a, const Common& c, Status& status, std::string& summary) {
  const auto kind = parse_instance(a.instance);
  const auto opts = c.options();
  InstanceLimits limits;
  limits.unsafe = c.unsafe;
  std::string cond = a.condition;
  for (auto& ch : cond) ch = static_cast<char>(std::toupper(ch));
  json r = {{"instance", instance_name(kind)}, {"condition", cond}};

  if (cond == "R") {
    if (a.f.empty() || a.p.empty()) throw std::invalid_argument("R needs --F and --P");
    Verdict v;
    if (kind == InstanceKind::Classical) {
      const auto fnm = parse_pair(a.f, "--F");
      const auto pnm = parse_pair(a.p, "--P");
      auto inst = build_instance(kind, 1, std::max({a.bound, fnm.first, pnm.first}), 0, limits);
      const auto& pair = *std::get<std::shared_ptr<const ClassicalPair>>(inst.pair);
      v = check_R(pair, classical_family(pair, fnm), classical_family(pair, pnm), a.d, opts);
    } else if (kind == InstanceKind::Branch) {
      const auto fnm = parse_pair(a.f, "--F");
      auto inst = build_instance(kind, a.k, a.bound, a.max_shape, limits);
      const auto& pair = *std::get<std::shared_ptr<const BranchPair>>(inst.pair);
      const auto base = parse_tree_arg(a.shape);
      v = check_R(pair, pair.g_family(fnm.first, fnm.second), pair.lp_family(base, std::stoul(a.p)), a.d, opts);
    } else {
      const auto fnm = parse_pair(a.f, "--F");
      auto inst = build_instance(kind, a.k, a.bound, a.max_shape, limits);
      const auto& pair = *std::get<std::shared_ptr<const StrongPair>>(inst.pair);
      const int bits = a.kind == "leaf" ? kLeaf : kPlain;
      const auto base = parse_tree_arg(a.shape);
      v = check_R(pair, pair.f_family(bits, fnm.first, fnm.second),
                  pair.p_family(bits, static_cast<unsigned>(std::stoul(a.p)), base), a.d, opts);
    }
    status = v.status;
    r["verdict"] = v.to_json();
  } else if (cond == "P") {
    if (kind == InstanceKind::Classical) {
      const auto fnm = parse_pair(a.f, "--F");
      const auto pnm = parse_pair(a.p, "--P");
      auto inst = build_instance(kind, 1, std::max({a.bound, fnm.first, pnm.first}), 0, limits);
      const auto& pair = *std::get<std::shared_ptr<const ClassicalPair>>(inst.pair);
      const Seq y = parse_list(a.y);
      Seq id;
      for (std::uint32_t i = 1; i <= (y.empty() ? 0 : y.back()); ++i) id.push_back(i);
      auto v = check_P(pair, classical_family(pair, pnm), y, {{classical_family(pair, fnm), id}}, a.d, opts);
      status = v.status;
      r["verdict"] = v.to_json();
    } else if (kind == InstanceKind::Branch) {
      BranchPair pair(a.k, a.bound, a.max_shape);
      const auto base = parse_tree_arg(a.shape);
      const auto q = pair.lp_family(base, a.level);
      if (q.elems.empty()) throw std::invalid_argument("no leaf preserving map from the base into that level");
      const auto dq = trunc_set(pair.background(), q.elems);
      if (a.f0_index >= dq.size()) throw std::invalid_argument("--f0-index out of range");
      auto rep = check_P_branch_instance(pair.background().universe(), q.elems, dq[a.f0_index], a.d, a.max_r, opts);
      status = rep.verdict.status;
      r["verdict"] = rep.verdict.to_json();
      r["q"] = rep.q;
      r["r"] = rep.r;
      r["reader_case"] = rep.reader_case;
      r["attempts"] = rep.attempts;
    } else {
      auto rep = check_P_star_instance(a.k, a.q, a.p_len, parse_list(a.f0), a.d, kind == InstanceKind::Milliken,
                                       a.max_r, opts);
      status = rep.verdict.status;
      r["verdict"] = rep.verdict.to_json();
      r["r"] = rep.r;
      r["attempts"] = rep.attempts;
    }
  } else {
    auto inst = build_instance(kind, a.k, a.bound, a.max_shape, limits);
    r["descriptor"] = inst.to_json();
    auto v = check_instance(inst, parse_check(cond));
    status = v.status;
    r["verdict"] = v.to_json();
  }
  summary = cond + " on " + instance_name(kind) + ": " + status_text(status);
  return r;
}

struct SearchArgs {
  std::string kind, s, t, flavor, variant, engine = "backtrack";
  unsigned d = 2, max_height = 6, k = 2, arity = 1, m = 1, tt = 1, max_n = 6;
};

json cmd_search(const SearchArgs& a, const Common& c, Status& status, std::string& summary) {
  std::string kind = a.kind;
  for (auto& ch : kind) ch = static_cast<char>(std::toupper(ch));
  const auto opts = c.options();
  if (kind == "GEN" || kind == "MILLIKEN") {
    const auto s = parse_tree_arg(a.s);
    const auto t = parse_tree_arg(a.t);
    const auto fl = flavor_arg(a.flavor.empty() ? (kind == "GEN" ? "LEAF" : "STRONG_LEAF") : a.flavor);
    auto res = kind == "GEN" ? gen_ramsey_search(s, t, a.d, fl, a.max_height, opts)
                             : milliken_search(s, t, a.d, fl, a.max_height, opts);
    status = res.status;
    summary = status == Status::Pass ? "V = " + canonical_code(res.v) + " (height " + std::to_string(res.height) +
                                           (res.minimal ? ", minimal)" : ")")
                                     : status_text(status);
    return res.report;
  }
  if (kind == "HJ") {
    HJOptions o;
    o.limits = opts.limits;
    o.adversary = opts.adversary;
    o.max_n = a.max_n;
    o.engine = a.engine == "exhaustive" ? HJEngine::Exhaustive : HJEngine::Backtrack;
    const auto variant = a.variant == "B" ? HJVariant::B : HJVariant::A;
    auto res = hj_search(a.k, a.arity, a.m, a.d, variant, o);
    status = res.status;
    summary = status == Status::Pass ? "n = " + std::to_string(res.n) : status_text(status);
    json r = res.to_json();
    r["kind"] = "hj-search";
    r["alphabet"] = a.k;
    r["arity"] = a.arity;
    r["m"] = a.m;
    r["d"] = a.d;
    r["variant"] = variant == HJVariant::A ? "A" : "B";
    return r;
  }
  if (kind == "HL") {
    const auto variant = a.variant == "HL2" ? HLVariant::HL2 : HLVariant::HL1;
    json r = {{"kind", "hl-search"}, {"k", a.k}, {"t", a.tt}, {"m", a.m}, {"d", a.d},
              {"variant", variant == HLVariant::HL1 ? "HL1" : "HL2"}, {"heights", json::array()}};
    status = Status::Undecided;
    for (unsigned n = a.m; n <= a.max_n; ++n) {
      auto v = hl_check(a.k, a.tt, a.m, a.d, n, variant, opts);
      r["heights"].push_back(v.to_json());
      if (v.status == Status::Fail) continue;
      status = v.status;
      if (v.pass()) r["n"] = n;
      break;
    }
    r["status"] = status_name(status);
    summary = status == Status::Pass ? "n = " + std::to_string(r["n"].get<unsigned>()) : status_text(status);
    return r;
  }
  throw std::invalid_argument("unknown search kind: " + a.kind);
}

struct TranslateArgs {
  std::string word;
  unsigned k = 2, t = 1, m = 1, d = 2;
};

json cmd_translate(const TranslateArgs& a, const Common& c, Status& status, std::string& summary) {
  json r = {{"kind", "translate"}};
  if (!a.word.empty()) {
    const auto w = word_from_json(parse_json_arg(a.word));
    const auto seq = translate_hj_to_hl(w, a.t);
    r["word"] = word_to_json(w);
    for (const auto& g : seq) r["sequence"].push_back(map_to_json(g));
    status = Status::Pass;
    summary = "strong sequence of " + std::to_string(seq.size()) + " embeddings";
    return r;
  }
  if (a.m < 1) throw std::invalid_argument("HL parameter m must be >= 1");
  const auto opts = c.options();
  HJOptions o;
  o.limits = opts.limits;
  o.adversary = opts.adversary;
  auto hj = hj_search(a.k, a.t, a.m - 1, a.d, HJVariant::A, o);
  r["hj"] = hj.to_json();
  if (hj.status != Status::Pass) {
    status = hj.status;
    summary = "HJ search: " + status_text(status);
    return r;
  }
  const unsigned n = hj.n + 1;
  r["n"] = n;
  const auto hjp = hj_problem(a.k, a.t, a.m - 1, a.d, hj.n, HJVariant::A);
  const auto seq = translate_hj_to_hl(hjp.line_words.front(), a.t);
  r["example"] = {{"word", word_to_json(hjp.line_words.front())}, {"sequence", json::array()}};
  for (const auto& g : seq) r["example"]["sequence"].push_back(map_to_json(g));
  auto at = hl_check(a.k, a.t, a.m, a.d, n, HLVariant::HL1, opts);
  r["hl"] = at.to_json();
  if (n > 0) r["hl_below"] = hl_check(a.k, a.t, a.m, a.d, n - 1, HLVariant::HL1, opts).to_json();
  status = at.status;
  summary = "HL1 at n = " + std::to_string(n) + ": " + status_text(status);
  return r;
}

json cmd_replay(const std::string& path, Status& status, std::string& summary) {
  const auto j = parse_json_arg(path);
  const auto res = replay_certificates(j);
  status = res.ok() ? Status::Pass : Status::Fail;
  summary = std::to_string(res.verified) + "/" + std::to_string(res.certificates) + " certificates verified";
  return {{"certificates", res.certificates}, {"verified", res.verified}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive checks for structural Ramsey statements on finite trees"};
  app.require_subcommand(1);
  Common common;

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "count the maps S -> T of a flavor");
  en->add_option("--S", ea.s, "domain tree")->required();
  en->add_option("--T", ea.t, "codomain tree")->required();
  en->add_option("--flavor", ea.flavor, "EMB, LEAF, STRONG or STRONG_LEAF");
  en->add_flag("--list", ea.list, "list the image sequences");
  add_common(en, common);

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "check an instance condition");
  ve->add_option("--instance", va.instance, "classical, star, branch or milliken")->required();
  ve->add_option("--condition", va.condition, "AXIOMS, POINTWISE, A, B, STAR, P or R")->required();
  ve->add_option("--k", va.k, "branching");
  ve->add_option("--bound", va.bound, "maxN, or the window level for branch");
  ve->add_option("--max-shape", va.max_shape, "largest sampled domain tree");
  ve->add_option("--d", va.d, "colors");
  ve->add_option("--F", va.f, "F family as n,m");
  ve->add_option("--P", va.p, "P family as n,m (classical) or the level n");
  ve->add_option("--shape", va.shape, "base tree of P");
  ve->add_option("--kind", va.kind, "plain or leaf")->check(CLI::IsMember({"plain", "leaf"}));
  ve->add_option("--y", va.y, "classical (P): y as a comma list");
  ve->add_option("--q", va.q, "star (P): q");
  ve->add_option("--p", va.p_len, "star (P): p");
  ve->add_option("--f0", va.f0, "star (P): f0 as node ids of T^q");
  ve->add_option("--level", va.level, "branch (P): Q = lp(shape, T^level)");
  ve->add_option("--f0-index", va.f0_index, "branch (P): index of f0 in dQ");
  ve->add_option("--max-r", va.max_r, "(P): largest r tried");
  add_common(ve, common);

  SearchArgs sa;
  auto* se = app.add_subcommand("search", "witness searches");
  se->add_option("--kind", sa.kind, "GEN, MILLIKEN, HJ or HL")->required();
  se->add_option("--S", sa.s, "GEN/MILLIKEN: S");
  se->add_option("--T", sa.t, "GEN/MILLIKEN: T");
  se->add_option("--flavor", sa.flavor, "LEAF, EMB, STRONG_LEAF or STRONG");
  se->add_option("--d", sa.d, "colors");
  se->add_option("--max-height", sa.max_height, "GEN/MILLIKEN: largest candidate height");
  se->add_option("--k,--alphabet", sa.k, "alphabet size or branching");
  se->add_option("--arity", sa.arity, "HJ: letters from A^arity");
  se->add_option("--m", sa.m, "parameters (HJ) or domain height (HL)");
  se->add_option("--t", sa.tt, "HL: t");
  se->add_option("--variant", sa.variant, "A, B, HL1 or HL2");
  se->add_option("--max-n", sa.max_n, "largest n tried");
  se->add_option("--engine", sa.engine, "HJ engine")->check(CLI::IsMember({"backtrack", "exhaustive"}));
  add_common(se, common);

  TranslateArgs ta;
  auto* tr = app.add_subcommand("translate", "HJ witness over A^t -> HL1 strong sequence");
  tr->add_option("--word", ta.word, "a parameter word (JSON text or file)");
  tr->add_option("--k", ta.k, "|A|");
  tr->add_option("--t", ta.t, "t");
  tr->add_option("--m", ta.m, "HL domain height");
  tr->add_option("--d", ta.d, "colors");
  add_common(tr, common);

  std::string replay_path;
  auto* re = app.add_subcommand("replay", "re-verify every certificate in a report");
  re->add_option("report", replay_path, "report JSON file")->required();
  add_common(re, common);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kPass;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Status status = Status::Undecided;
  std::string summary;
  json result;
  std::string name;
  try {
    if (*en) {
      name = "enumerate";
      result = cmd_enumerate(ea, status, summary);
    } else if (*ve) {
      name = "verify";
      result = cmd_verify(va, common, status, summary);
    } else if (*se) {
      name = "search";
      result = cmd_search(sa, common, status, summary);
    } else if (*tr) {
      name = "translate";
      result = cmd_translate(ta, common, status, summary);
    } else {
      name = "replay";
      result = cmd_replay(replay_path, status, summary);
    }
  } catch (const InstanceTooLarge& e) {
    status = Status::Undecided;
    summary = std::string("UNDECIDED-AT-SCALE: ") + e.what();
    result = {{"guard", e.what()}};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
  json report = {{"schema", 1},        {"command", name},         {"argv", echo},
                 {"engine", common.engine()}, {"status", status_name(status)}, {"result", result},
                 {"wall_ms", ms}};
  if (!common.certificate.empty()) {
    std::ofstream f(common.certificate);
    if (!f) {
      err << "error: cannot write " << common.certificate << "\n";
      return kUsage;
    }
    f << report.dump(2) << "\n";
  }
  if (common.json_out)
    out << report.dump(2) << "\n";
  else
    out << name << ": " << summary << "\n";
  return exit_for(status);
}

}  // namespace treeramsey::cli
