#include "tnncells/poset_io.hpp"

#include <sstream>

#include "tnncells/error.hpp"

namespace tnn {

namespace {

nlohmann::json word_json(const WeylGroup& g, WeylElt w) {
  auto arr = nlohmann::json::array();
  for (std::uint8_t i : g.word(w)) arr.push_back(int(i));
  return arr;
}

WeylElt word_from_json(const WeylGroup& g, const nlohmann::json& arr) {
  if (!arr.is_array()) throw InvalidInputError("word must be an array of letters");
  std::vector<int> letters;
  for (const auto& x : arr) letters.push_back(x.get<int>());
  if (!g.is_reduced(letters)) throw InvalidInputError("serialized word is not reduced");
  return g.from_word(letters);
}

}  // namespace

nlohmann::json poset_to_json(const ClosurePoset& p) {
  const WeylGroup& g = p.group();
  nlohmann::json out;
  out["cartan"] = g.type().to_string();
  auto jarr = nlohmann::json::array();
  for (int i : p.context().j()) jarr.push_back(i + 1);
  out["J"] = jarr;

  auto nodes = nlohmann::json::array();
  for (std::size_t id = 0; id < p.size(); ++id) {
    const StratumIndex& s = p.nodes()[id];
    nodes.push_back({{"id", id},
                     {"x", word_json(g, s.x)},
                     {"u", word_json(g, s.u)},
                     {"w", word_json(g, s.w)},
                     {"dim", p.dim(id)}});
  }
  out["nodes"] = std::move(nodes);

  auto covers = nlohmann::json::array();
  for (auto [upper, lower] : p.covers())
    covers.push_back({upper, lower});
  out["covers"] = std::move(covers);
  return out;
}

std::string poset_to_dot(const ClosurePoset& p) {
  const WeylGroup& g = p.group();
  std::ostringstream os;
  os << "digraph closure_poset {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int d = 0; d <= p.max_dim(); ++d) {
    bool any = false;
    for (std::size_t id = 0; id < p.size(); ++id)
      if (p.dim(id) == d) {
        if (!any) os << "  { rank=same;";
        any = true;
        const StratumIndex& s = p.nodes()[id];
        os << " n" << id << " [label=\"" << g.to_string(s.x) << " | "
           << g.to_string(s.u) << " | " << g.to_string(s.w) << "\"];";
      }
    if (any) os << " }\n";
  }
  for (auto [upper, lower] : p.covers())
    os << "  n" << upper << " -> n" << lower << ";\n";
  os << "}\n";
  return os.str();
}

ParsedPoset poset_from_json(const nlohmann::json& j, const WeylGroup& group) {
  CartanType type = CartanType::parse(j.at("cartan").get<std::string>());
  if (!(type == group.type()))
    throw InvalidInputError("poset file has type " + type.to_string() +
                            ", expected " + group.type().to_string());
  ParsedPoset out{type, {}, {}, {}, {}};
  for (const auto& x : j.at("J")) {
    int one_based = x.get<int>();
    if (one_based < 1 || one_based > group.rank())
      throw InvalidInputError("J index out of range in poset file");
    out.j.push_back(one_based - 1);
  }
  for (const auto& node : j.at("nodes")) {
    if (node.at("id").get<std::size_t>() != out.nodes.size())
      throw InvalidInputError("node ids must be consecutive from 0");
    StratumIndex s{word_from_json(group, node.at("x")),
                   word_from_json(group, node.at("u")),
                   word_from_json(group, node.at("w"))};
    int d = node.at("dim").get<int>();
    if (d != dimension(s)) throw InvalidInputError("node dimension mismatch");
    out.nodes.push_back(s);
    out.dims.push_back(d);
  }
  for (const auto& c : j.at("covers")) {
    std::uint32_t upper = c.at(0).get<std::uint32_t>();
    std::uint32_t lower = c.at(1).get<std::uint32_t>();
    if (upper >= out.nodes.size() || lower >= out.nodes.size())
      throw InvalidInputError("cover endpoint out of range");
    out.covers.emplace_back(upper, lower);
  }
  return out;
}

bool equals(const ClosurePoset& p, const ParsedPoset& parsed) {
  if (!(p.group().type() == parsed.type)) return false;
  if (p.context().j() != parsed.j) return false;
  if (p.size() != parsed.nodes.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p.nodes()[i] == parsed.nodes[i]) || p.dim(i) != parsed.dims[i])
      return false;
  return p.covers() == parsed.covers;
}

}  // namespace tnn
