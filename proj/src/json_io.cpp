#include "pathgames/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pathgames {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& kind, const std::string& msg) {
  throw IoError(kind, msg);
}

// nlohmann reports a byte offset; turn it into line/column for the message.
[[noreturn]] void fail_syntax(const std::string& text,
                              const nlohmann::json::parse_error& e) {
  std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
  if (byte > text.size()) byte = text.size();
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream msg;
  msg << "syntax error at line " << line << ", column " << col << ": "
      << e.what();
  fail("syntax", msg.str());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_syntax(text, e);
  }
}

ExtRational parse_rational(const json& node, const std::string& where) {
  if (!node.is_string())
    fail("bad-rational", where + ": rationals must be strings");
  try {
    return ExtRational::parse(node.get<std::string>());
  } catch (const std::exception& e) {
    fail("bad-rational", where + ": " + e.what());
  }
}

const json& require(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail("missing-field", "missing \"" + key + "\"");
  return *it;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string LoadedGame::player_label(int player) const {
  int id = spec.players[player];
  if (is_vertex_family(spec.family)) return vertex_names[id];
  return "e" + std::to_string(id);
}

std::optional<int> LoadedGame::player_index(const std::string& label) const {
  for (int i = 0; i < spec.player_count(); ++i)
    if (player_label(i) == label) return i;
  return std::nullopt;
}

LoadedGame parse_game_file(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) fail("syntax", "top level must be an object");

  Graph g;
  g.directed = require(doc, "directed").get<bool>();

  const json& verts = require(doc, "vertices");
  if (!verts.is_array() || verts.empty())
    fail("bad-vertices", "\"vertices\" must be a non-empty array");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const auto& v : verts) {
    if (!v.is_string()) fail("bad-vertices", "vertex ids must be strings");
    std::string name = v.get<std::string>();
    if (!index.emplace(name, static_cast<int>(names.size())).second)
      fail("duplicate-id", "duplicate vertex \"" + name + "\"");
    names.push_back(name);
  }
  g.vertex_count = static_cast<int>(names.size());

  auto vertex_of = [&](const json& node, const std::string& where) {
    if (!node.is_string()) fail("unknown-vertex", where + ": expected a vertex id");
    std::string name = node.get<std::string>();
    auto it = index.find(name);
    if (it == index.end())
      fail("unknown-vertex", where + ": unknown vertex \"" + name + "\"");
    return it->second;
  };
  g.source = vertex_of(require(doc, "source"), "source");
  g.sink = vertex_of(require(doc, "sink"), "sink");
  if (g.source == g.sink) fail("bad-terminals", "source equals sink");

  const json& edges = require(doc, "edges");
  if (!edges.is_array()) fail("bad-edges", "\"edges\" must be an array");
  int m = static_cast<int>(edges.size());
  g.edges.assign(m, {0, 0});
  std::vector<ExtRational> edge_costs(m, ExtRational(0));
  std::vector<bool> seen(m, false);
  for (const auto& e : edges) {
    if (!e.is_object()) fail("bad-edges", "each edge must be an object");
    const json& idn = require(e, "id");
    if (!idn.is_number_integer()) fail("bad-edges", "edge id must be an integer");
    int id = idn.get<int>();
    if (id < 0 || id >= m)
      fail("bad-edges", "edge ids must cover 0.." + std::to_string(m - 1));
    if (seen[id])
      fail("duplicate-id", "duplicate edge id " + std::to_string(id));
    seen[id] = true;
    std::string where = "edge " + std::to_string(id);
    int tail = vertex_of(require(e, "tail"), where);
    int head = vertex_of(require(e, "head"), where);
    if (tail == head) fail("self-loop", where + " is a self-loop");
    g.edges[id] = {tail, head};
    if (auto it = e.find("cost"); it != e.end())
      edge_costs[id] = parse_rational(*it, where + " cost");
  }

  std::string fam = require(doc, "family").get<std::string>();
  Family family;
  if (fam == "epcg") family = Family::Epcg;
  else if (fam == "vpcg") family = Family::Vpcg;
  else if (fam == "epcg-dual") family = Family::EpcgDual;
  else if (fam == "vpcg-dual") family = Family::VpcgDual;
  else fail("bad-family", "unknown family \"" + fam + "\"");

  std::vector<ExtRational> costs;
  if (is_vertex_family(family)) {
    std::vector<ExtRational> per_vertex(g.vertex_count, ExtRational(0));
    if (auto it = doc.find("vertex_costs"); it != doc.end()) {
      if (!it->is_object())
        fail("bad-vertex-costs", "\"vertex_costs\" must be an object");
      for (const auto& [name, val] : it->items()) {
        auto v = index.find(name);
        if (v == index.end())
          fail("unknown-vertex", "vertex_costs: unknown vertex \"" + name + "\"");
        if (v->second == g.source || v->second == g.sink)
          fail("bad-vertex-costs", "terminals carry no cost: \"" + name + "\"");
        per_vertex[v->second] = parse_rational(val, "vertex_costs " + name);
      }
    }
    for (int v = 0; v < g.vertex_count; ++v)
      if (v != g.source && v != g.sink) costs.push_back(per_vertex[v]);
  } else {
    costs = std::move(edge_costs);
  }

  ExtRational reward(1);
  if (auto it = doc.find("reward"); it != doc.end())
    reward = parse_rational(*it, "reward");

  LoadedGame out;
  out.vertex_names = std::move(names);
  out.spec = GameSpec::make(family, std::move(g), std::move(costs), reward);
  return out;
}

LoadedGame load_game_file(const std::string& path) {
  return parse_game_file(read_file(path));
}

PayoffVector parse_payoff_file(const std::string& text,
                               const LoadedGame& game) {
  json doc = parse_json(text);
  if (!doc.is_object()) fail("syntax", "top level must be an object");
  PayoffVector x(game.spec.player_count(), ExtRational(0));
  for (const auto& [label, val] : require(doc, "payoff").items()) {
    auto i = game.player_index(label);
    if (!i) fail("unknown-player", "unknown player \"" + label + "\"");
    x[*i] = parse_rational(val, "payoff " + label);
  }
  return x;
}

std::string payoff_to_json(const LoadedGame& game, const PayoffVector& x) {
  json payoff = json::object();
  for (int i = 0; i < game.spec.player_count(); ++i)
    payoff[game.player_label(i)] = x[i].str();
  json doc;
  doc["payoff"] = std::move(payoff);
  return doc.dump(2) + "\n";
}

std::vector<ExtRational> parse_probs_file(const std::string& text,
                                          const LoadedGame& game,
                                          bool edge_mode) {
  const Graph& g = game.spec.graph;
  int slots = edge_mode ? g.edge_count() : g.vertex_count;
  std::vector<ExtRational> p(slots, ExtRational(1));
  json doc = parse_json(text);
  if (!doc.is_object()) fail("syntax", "top level must be an object");
  for (const auto& [label, val] : doc.items()) {
    int slot = -1;
    if (edge_mode) {
      if (label.size() > 1 && label[0] == 'e') {
        try {
          slot = std::stoi(label.substr(1));
        } catch (const std::exception&) {
        }
      }
      if (slot < 0 || slot >= slots)
        fail("unknown-player", "unknown edge \"" + label + "\"");
    } else {
      for (int v = 0; v < g.vertex_count; ++v)
        if (game.vertex_names[v] == label) slot = v;
      if (slot < 0 || slot == g.source || slot == g.sink)
        fail("unknown-player", "unknown internal vertex \"" + label + "\"");
    }
    p[slot] = parse_rational(val, "probability " + label);
  }
  return p;
}

}  // namespace pathgames
