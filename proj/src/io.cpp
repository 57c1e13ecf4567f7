#include "treeramsey/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace treeramsey {

using json = nlohmann::json;

namespace {

unsigned parse_uint(std::string_view s, const std::string& what) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw TreeError("expected a number in " + what + ", got '" + std::string(s) + "'");
  return v;
}

}  // namespace

json tree_to_json(const OrderedTree& t) { return {{"parent", t.parent_array()}, {"code", canonical_code(t)}}; }

OrderedTree tree_from_json(const json& j) {
  if (!j.is_object()) throw TreeError("tree JSON must be an object");
  if (j.contains("parent")) {
    const auto& p = j["parent"];
    if (!p.is_array()) throw TreeError("\"parent\" must be an array");
    std::vector<std::int64_t> parents;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!p[i].is_number_integer()) throw TreeError("parent[" + std::to_string(i) + "] is not an integer");
      parents.push_back(p[i].get<std::int64_t>());
    }
    return OrderedTree::from_parents(parents);
  }
  if (j.contains("code")) return tree_from_code(j["code"].get<std::string>());
  throw TreeError("tree JSON needs \"parent\" or \"code\"");
}

json map_to_json(const TreeMap& f) {
  return {{"domain", tree_to_json(f.domain())}, {"codomain", tree_to_json(f.codomain())}, {"image", f.image()}};
}

TreeMap map_from_json(const json& j) {
  auto dom = tree_from_json(j.at("domain"));
  auto cod = tree_from_json(j.at("codomain"));
  auto image = j.at("image").get<std::vector<NodeId>>();
  return TreeMap(std::move(dom), std::move(cod), std::move(image));
}

json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\n");
  const bool inline_json = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  if (!inline_json) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

OrderedTree parse_tree_arg(const std::string& arg) {
  if (arg.empty()) throw TreeError("empty tree argument");
  if (arg[0] == '(') return tree_from_code(arg);
  if (arg.rfind("chain:", 0) == 0) return chain(parse_uint(arg.substr(6), "chain:n"));
  if (arg.rfind("regular:", 0) == 0) {
    const auto rest = arg.substr(8);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw TreeError("expected regular:k,n");
    return regular_tree(parse_uint(rest.substr(0, comma), "regular:k,n"),
                        parse_uint(rest.substr(comma + 1), "regular:k,n"));
  }
  if (arg[0] == '{' || std::filesystem::exists(arg)) return tree_from_json(parse_json_arg(arg));
  throw TreeError("cannot read tree '" + arg + "'");
}

}  // namespace treeramsey
