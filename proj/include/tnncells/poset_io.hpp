#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tnncells/poset.hpp"

namespace tnn {

// Schema:
//   { "cartan": "A2", "J": [1],
//     "nodes":  [ { "id": 0, "x": [0], "u": [0], "w": [], "dim": 0 }, ... ],
//     "covers": [ [upper_id, lower_id], ... ] }
// Words are 0-based letter arrays; the J list is 1-based as on the command
// line; node ids follow the deterministic enumeration order.
nlohmann::json poset_to_json(const ClosurePoset& p);

// DOT digraph, rank-grouped by dimension, edges directed upper -> lower.
std::string poset_to_dot(const ClosurePoset& p);

struct ParsedPoset {
  CartanType type;
  std::vector<int> j;  // 0-based
  std::vector<StratumIndex> nodes;
  std::vector<int> dims;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
};

// Reads the JSON schema back; elements are resolved in `group`, which must
// match the recorded Cartan type.
ParsedPoset poset_from_json(const nlohmann::json& j, const WeylGroup& group);

// Structural equality against a parsed file: same type, J, node list (with
// dimensions) and cover list.
bool equals(const ClosurePoset& p, const ParsedPoset& parsed);

}  // namespace tnn
