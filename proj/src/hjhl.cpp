#include "treeramsey/hjhl.hpp"

#include <map>

namespace treeramsey {

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// position of the first occurrence of parameter j, or n when it does not occur
unsigned first_occurrence(const ParameterWord& w, std::uint32_t j) {
  for (unsigned i = 0; i < w.n(); ++i)
    if (w.letters[i] == Symbol::param(j)) return i;
  return w.n();
}

Word substitute_prefix(const ParameterWord& w, unsigned len, const Word& x) {
  Word out(len);
  for (unsigned i = 0; i < len; ++i) {
    const auto& c = w.letters[i];
    out[i] = c.kind == Symbol::Letter ? c.value : x.at(c.value - 1);
  }
  return out;
}

unsigned common_prefix(const Word& a, const Word& b) {
  unsigned i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return i;
}

void extend_words(const ParameterWord& base, unsigned n, unsigned next, std::vector<ParameterWord>& out,
                  ParameterWord& cur) {
  const unsigned pos = cur.n();
  const unsigned missing = cur.m + 1 - next;
  if (n - pos < missing) return;
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  const auto s = base.alphabet_size();
  for (std::uint32_t a = 0; a < s; ++a) {
    cur.letters.push_back(Symbol::letter(a));
    extend_words(base, n, next, out, cur);
    cur.letters.pop_back();
  }
  for (std::uint32_t j = 1; j <= std::min(next, cur.m); ++j) {
    cur.letters.push_back(Symbol::param(j));
    extend_words(base, n, j == next ? next + 1 : next, out, cur);
    cur.letters.pop_back();
  }
}

}  // namespace

unsigned ParameterWord::alphabet_size() const { return static_cast<unsigned>(ipow(k, arity)); }

void validate(const ParameterWord& w) {
  if (w.k < 1) throw InvalidWord("alphabet must be non-empty");
  if (w.arity < 1) throw InvalidWord("arity must be >= 1");
  const auto s = w.alphabet_size();
  std::uint32_t next = 1;
  for (const auto& c : w.letters) {
    if (c.kind == Symbol::Letter) {
      if (c.value >= s) throw InvalidWord("letter " + std::to_string(c.value) + " outside the alphabet");
      continue;
    }
    if (c.value < 1 || c.value > w.m) throw InvalidWord("parameter " + std::to_string(c.value) + " outside [m]");
    if (c.value > next) throw InvalidWord("parameter " + std::to_string(c.value) + " occurs before " +
                                          std::to_string(next) + " (prefixes must use an initial segment)");
    if (c.value == next) ++next;
  }
  if (next != w.m + 1) throw InvalidWord("parameter " + std::to_string(next) + " does not occur");
}

bool is_valid(const ParameterWord& w) {
  try {
    validate(w);
    return true;
  } catch (const InvalidWord&) {
    return false;
  }
}

json word_to_json(const ParameterWord& w) {
  json letters = json::array();
  for (const auto& c : w.letters)
    letters.push_back({{"kind", c.kind == Symbol::Letter ? "letter" : "param"}, {"value", c.value}});
  return {{"n", w.n()}, {"m", w.m}, {"k", w.k}, {"arity", w.arity}, {"letters", letters}};
}

ParameterWord word_from_json(const json& j) {
  ParameterWord w;
  w.k = j.value("k", 2u);
  w.arity = j.value("arity", 1u);
  w.m = j.at("m").get<unsigned>();
  for (const auto& c : j.at("letters")) {
    const auto kind = c.at("kind").get<std::string>();
    if (kind != "letter" && kind != "param") throw InvalidWord("letter kind must be letter or param");
    w.letters.push_back({kind == "letter" ? Symbol::Letter : Symbol::Param, c.at("value").get<std::uint32_t>()});
  }
  if (j.contains("n") && j["n"].get<unsigned>() != w.n()) throw InvalidWord("n does not match the letters");
  validate(w);
  return w;
}

std::string word_label(const ParameterWord& w) {
  std::string s;
  for (const auto& c : w.letters) {
    if (!s.empty()) s += ' ';
    s += c.kind == Symbol::Letter ? std::to_string(c.value) : "x" + std::to_string(c.value);
  }
  return "(" + s + ")";
}

std::vector<Word> all_words(unsigned s, unsigned len) {
  std::vector<Word> out;
  if (s == 0) {
    if (len == 0) out.emplace_back();
    return out;
  }
  Word cur(len, 0);
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(len) - 1;
    while (i >= 0 && ++cur[i] == s) cur[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<ParameterWord> valid_words(unsigned k, unsigned arity, unsigned n, unsigned m) {
  ParameterWord base{k, arity, m, {}};
  std::vector<ParameterWord> out;
  auto cur = base;
  extend_words(base, n, 1, out, cur);
  return out;
}

Word apply_word(const ParameterWord& w, const Word& x) {
  if (x.size() != w.m) throw std::invalid_argument("apply_word: argument length differs from m");
  return substitute_prefix(w, w.n(), x);
}

TreeMap induced_embedding(const ParameterWord& w) {
  validate(w);
  const auto s = w.alphabet_size();
  auto dom = regular_tree(s, w.m + 1);
  auto cod = regular_tree(s, w.n() + 1);
  std::vector<NodeId> image(dom.size());
  for (NodeId v = 0; v < dom.size(); ++v) {
    const auto p = path_of(dom, v);
    Word x(p.begin(), p.end());
    const auto l = static_cast<unsigned>(x.size());
    const unsigned len = l == w.m ? w.n() : first_occurrence(w, l + 1);
    const auto y = substitute_prefix(w, len, x);
    image[v] = node_at(cod, std::vector<std::uint32_t>(y.begin(), y.end()));
  }
  return TreeMap(std::move(dom), std::move(cod), std::move(image));
}

MeetLevel meet_level(const ParameterWord& w, unsigned i0, const Word& v0) {
  if (i0 > w.m) throw std::invalid_argument("meet_level: i0 > m");
  if (v0.size() != i0) throw std::invalid_argument("meet_level: v0 must have length i0");
  MeetLevel out;
  out.i1 = i0 == w.m ? w.n() : first_occurrence(w, i0 + 1);
  out.v1 = substitute_prefix(w, out.i1, v0);
  return out;
}

std::vector<ParameterWord> split_word(const ParameterWord& w) {
  validate(w);
  std::vector<ParameterWord> out;
  for (unsigned i = 0; i < w.arity; ++i) {
    ParameterWord wi{w.k, 1, w.m, {}};
    const auto div = ipow(w.k, w.arity - 1 - i);
    for (const auto& c : w.letters)
      wi.letters.push_back(c.kind == Symbol::Letter ? Symbol::letter(static_cast<std::uint32_t>(c.value / div % w.k))
                                                    : c);
    validate(wi);
    out.push_back(std::move(wi));
  }
  return out;
}

LeafMap leaf_map_of(const ParameterWord& w) {
  LeafMap out;
  for (const auto& x : all_words(w.alphabet_size(), w.m)) out.push_back(apply_word(w, x));
  return out;
}

bool is_strong_sequence(const std::vector<LeafMap>& seq, unsigned s, unsigned m) {
  const auto count = ipow(s, m);
  for (const auto& f : seq)
    if (f.size() != count) return false;
  if (seq.empty()) return true;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) {
      const auto h = common_prefix(seq[0][a], seq[0][b]);
      for (const auto& f : seq)
        if (common_prefix(f[a], f[b]) != h) return false;
    }
  return true;
}

HJProblem hj_problem(unsigned k, unsigned arity, unsigned m, unsigned d, unsigned n, HJVariant variant) {
  HJProblem out;
  const auto s = static_cast<unsigned>(ipow(k, arity));
  std::map<Word, std::uint32_t> index;
  for (unsigned len = variant == HJVariant::A ? n : 0; len <= n; ++len)
    for (auto& x : all_words(s, len)) {
      index.emplace(x, static_cast<std::uint32_t>(out.points.size()));
      out.points.push_back(std::move(x));
    }
  auto& prob = out.problem;
  prob.points = out.points.size();
  prob.colors = d;
  for (const auto& x : out.points) {
    std::string label;
    for (auto c : x) label += std::to_string(c) + (s > 10 ? "." : "");
    prob.labels.push_back("w" + label);
  }
  for (unsigned len = variant == HJVariant::A ? n : m; len <= n; ++len)
    for (auto& w : valid_words(k, arity, len, m)) {
      std::vector<std::uint32_t> line;
      if (variant == HJVariant::A) {
        for (const auto& x : all_words(s, m)) line.push_back(index.at(apply_word(w, x)));
      } else {
        for (unsigned l = 0; l <= m; ++l) {
          const unsigned cut = l == m ? len : first_occurrence(w, l + 1);
          for (const auto& x : all_words(s, l)) line.push_back(index.at(substitute_prefix(w, cut, x)));
        }
      }
      prob.lines.push_back(std::move(line));
      out.line_words.push_back(std::move(w));
    }
  prob.normalize();
  return out;
}

json HJResult::to_json() const {
  json j = {{"status", status_name(status)}, {"refutations", refutations}};
  if (status == Status::Pass) j["n"] = n;
  if (any_refuted) j["largest_refuted"] = largest_refuted;
  return j;
}

HJResult hj_search(unsigned k, unsigned arity, unsigned m, unsigned d, HJVariant variant, const HJOptions& opts) {
  if (k < 1) throw std::invalid_argument("hj_search needs a non-empty alphabet");
  if (d < 1) throw std::invalid_argument("hj_search needs d >= 1");
  HJResult out;
  for (unsigned n = m; n <= opts.max_n; ++n) {
    const auto s = ipow(k, arity);
    std::size_t predicted = variant == HJVariant::A ? ipow(s, n) : 0;
    if (variant == HJVariant::B)
      for (unsigned l = 0; l <= n; ++l) predicted += ipow(s, l);
    if (!opts.limits.allows(predicted, d)) return out;
    const auto hj = hj_problem(k, arity, m, d, n, variant);
    std::optional<Coloring> c;
    if (opts.engine == HJEngine::Exhaustive)
      c = exhaustive_avoiding_coloring(hj.problem);
    else
      c = find_avoiding_coloring(hj.problem, opts.adversary);
    if (!c) {
      out.status = Status::Pass;
      out.n = n;
      return out;
    }
    auto cert = coloring_certificate(hj.problem, *c);
    cert["n"] = n;
    out.refutations.push_back(std::move(cert));
    out.largest_refuted = n;
    out.any_refuted = true;
  }
  return out;
}

std::optional<ParameterWord> hj_witness(const HJProblem& hj, const Coloring& coloring) {
  for (std::size_t i = 0; i < hj.problem.lines.size(); ++i) {
    const auto& line = hj.problem.lines[i];
    bool mono = true;
    for (auto p : line) mono = mono && coloring.at(p) == coloring.at(line.front());
    if (mono) return hj.line_words[i];
  }
  return std::nullopt;
}

HLProblem hl_problem(unsigned k, unsigned t, unsigned m, unsigned d, unsigned n, HLVariant variant) {
  if (t < 1) throw std::invalid_argument("hl needs t >= 1");
  HLProblem out;
  const auto tn = regular_tree(k, n);
  const auto tm = regular_tree(k, m);
  auto& prob = out.problem;
  prob.colors = d;

  // points: t-tuples of nodes at a common height (leaves only for HL1)
  std::vector<std::vector<NodeId>> by_height(n + 1);
  for (NodeId v = 0; v < tn.size(); ++v)
    if (variant == HLVariant::HL2 || tn.height(v) == n) by_height[tn.height(v)].push_back(v);
  for (const auto& layer : by_height) {
    if (layer.empty()) continue;
    std::vector<std::size_t> pos(t, 0);
    while (true) {
      std::vector<NodeId> tuple;
      for (auto i : pos) tuple.push_back(layer[i]);
      out.index.emplace(tuple, static_cast<std::uint32_t>(out.points.size()));
      out.points.push_back(std::move(tuple));
      int i = static_cast<int>(t) - 1;
      while (i >= 0 && ++pos[i] == layer.size()) pos[i--] = 0;
      if (i < 0) break;
    }
  }
  prob.points = out.points.size();
  for (const auto& tuple : out.points) {
    std::string label;
    for (auto v : tuple) {
      label += label.empty() ? "(" : ",";
      label += "r";
      for (auto c : path_of(tn, v)) label += std::to_string(c);
    }
    prob.labels.push_back(label + ")");
  }
  if (tm.empty() || tn.empty()) return out;

  // maps grouped by level map; any t of them with one level map form a strong sequence
  const auto maps = enumerate_images(tm, tn, variant == HLVariant::HL1 ? Flavor::StrongLeaf : Flavor::Strong);
  std::map<std::vector<unsigned>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::vector<unsigned> sigma(m + 1, 0);
    for (NodeId v = 0; v < tm.size(); ++v) sigma[tm.height(v)] = tn.height(maps[i][v]);
    groups[sigma].push_back(i);
  }
  std::vector<std::vector<NodeId>> dom_layers(m + 1);
  for (NodeId v = 0; v < tm.size(); ++v)
    if (variant == HLVariant::HL2 || tm.height(v) == m) dom_layers[tm.height(v)].push_back(v);

  for (const auto& [sigma, members] : groups) {
    std::vector<std::size_t> pick(t, 0);
    while (true) {
      std::vector<std::vector<NodeId>> seq;
      for (auto i : pick) seq.push_back(maps[members[i]]);
      std::vector<std::uint32_t> line;
      for (const auto& layer : dom_layers) {
        if (layer.empty()) continue;
        std::vector<std::size_t> pos(t, 0);
        while (true) {
          std::vector<NodeId> tuple;
          for (unsigned j = 0; j < t; ++j) tuple.push_back(seq[j][layer[pos[j]]]);
          line.push_back(out.index.at(tuple));
          int i = static_cast<int>(t) - 1;
          while (i >= 0 && ++pos[i] == layer.size()) pos[i--] = 0;
          if (i < 0) break;
        }
      }
      prob.lines.push_back(std::move(line));
      out.sequences.push_back(std::move(seq));
      int i = static_cast<int>(t) - 1;
      while (i >= 0 && ++pick[i] == members.size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  prob.normalize();
  return out;
}

Verdict hl_check(unsigned k, unsigned t, unsigned m, unsigned d, unsigned n, HLVariant variant,
                 const CheckOptions& opts) {
  if (d < 1) throw std::invalid_argument("hl_check needs d >= 1");
  const auto hl = hl_problem(k, t, m, d, n, variant);
  const json where = {{"k", k}, {"t", t}, {"m", m}, {"n", n}, {"variant", variant == HLVariant::HL1 ? "HL1" : "HL2"}};
  if (hl.problem.lines.empty()) {
    auto cert = coloring_certificate(hl.problem, Coloring(hl.problem.points, 0));
    cert["reason"] = "no strong sequence T^m -> T^n";
    cert["instance"] = where;
    return {Status::Fail, std::move(cert)};
  }
  if (!opts.limits.allows(hl.problem.points, d))
    return {Status::Undecided,
            {{"kind", "scale-guard"}, {"points", hl.problem.points}, {"colors", d}, {"instance", where}}};
  if (auto c = find_avoiding_coloring(hl.problem, opts.adversary)) {
    auto cert = coloring_certificate(hl.problem, *c);
    cert["instance"] = where;
    return {Status::Fail, std::move(cert)};
  }
  return {Status::Pass,
          {{"kind", "exhausted"}, {"points", hl.problem.points}, {"lines", hl.problem.lines.size()}, {"instance", where}}};
}

std::vector<TreeMap> translate_hj_to_hl(const ParameterWord& w, unsigned t) {
  if (w.arity != t) throw InvalidWord("witness word is over A^" + std::to_string(w.arity) + ", expected A^" +
                                      std::to_string(t));
  std::vector<TreeMap> out;
  std::vector<LeafMap> leaves;
  for (const auto& wi : split_word(w)) {
    out.push_back(induced_embedding(wi));
    leaves.push_back(leaf_map_of(wi));
  }
  if (!is_strong_sequence(leaves, w.k, w.m)) throw std::logic_error("split word is not a strong sequence");
  return out;
}

Coloring pull_back_coloring(const HJProblem& hj, const HLProblem& hl, unsigned k, unsigned t, const Coloring& c) {
  Coloring out(hj.points.size());
  for (std::size_t p = 0; p < hj.points.size(); ++p) {
    const auto& u = hj.points[p];
    const auto tn = regular_tree(k, static_cast<unsigned>(u.size()) + 1);
    std::vector<NodeId> tuple;
    for (unsigned i = 0; i < t; ++i) {
      std::vector<std::uint32_t> path;
      const auto div = ipow(k, t - 1 - i);
      for (auto letter : u) path.push_back(static_cast<std::uint32_t>(letter / div % k));
      tuple.push_back(node_at(tn, path));
    }
    out[p] = c.at(hl.index.at(tuple));
  }
  return out;
}

bool hl_monochromatic(const HLProblem& hl, const std::vector<TreeMap>& seq, const Coloring& c) {
  if (seq.empty()) return false;
  const auto leaves = seq.front().domain().leaves();
  const auto t = seq.size();
  std::vector<std::size_t> pos(t, 0);
  std::optional<std::uint8_t> color;
  while (true) {
    std::vector<NodeId> tuple;
    for (std::size_t j = 0; j < t; ++j) tuple.push_back(seq[j](leaves[pos[j]]));
    const auto it = hl.index.find(tuple);
    if (it == hl.index.end()) return false;
    if (color && *color != c.at(it->second)) return false;
    color = c.at(it->second);
    int i = static_cast<int>(t) - 1;
    while (i >= 0 && ++pos[i] == leaves.size()) pos[i--] = 0;
    if (i < 0) break;
  }
  return true;
}

}  // namespace treeramsey
