#pragma once

#include <string>

#include <json.hpp>

#include "treeramsey/embedding.hpp"
#include "treeramsey/tree.hpp"

namespace treeramsey {

/// {"parent": [-1, 0, ...]}; the code is added for readability and ignored on input.
nlohmann::json tree_to_json(const OrderedTree& t);
/// Accepts {"parent": [...]} or {"code": "(()())"}. Throws TreeError on bad input.
OrderedTree tree_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const TreeMap& f);
TreeMap map_from_json(const nlohmann::json& j);

/// A tree given on the command line: JSON text, a parenthesis code, "chain:n",
/// "regular:k,n", or the path of a JSON file. Errors carry the position when known.
OrderedTree parse_tree_arg(const std::string& arg);

/// Reads a JSON document from text or from a file path.
nlohmann::json parse_json_arg(const std::string& arg);

}  // namespace treeramsey
