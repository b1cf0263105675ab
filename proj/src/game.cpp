#include "pathgames/game.hpp"

#include <algorithm>
#include <cassert>

namespace pathgames {

std::string family_name(Family f) {
  switch (f) {
    case Family::Epcg: return "epcg";
    case Family::Vpcg: return "vpcg";
    case Family::EpcgDual: return "epcg-dual";
    case Family::VpcgDual: return "vpcg-dual";
  }
  return "?";
}

bool is_dual(Family f) {
  return f == Family::EpcgDual || f == Family::VpcgDual;
}

bool is_vertex_family(Family f) {
  return f == Family::Vpcg || f == Family::VpcgDual;
}

Family dual_of(Family f) {
  switch (f) {
    case Family::Epcg: return Family::EpcgDual;
    case Family::EpcgDual: return Family::Epcg;
    case Family::Vpcg: return Family::VpcgDual;
    case Family::VpcgDual: return Family::Vpcg;
  }
  return f;
}

namespace {

std::vector<int> players_of(Family family, const Graph& g) {
  std::vector<int> players;
  if (is_vertex_family(family)) {
    for (int v = 0; v < g.vertex_count; ++v)
      if (v != g.source && v != g.sink) players.push_back(v);
  } else {
    for (int e = 0; e < g.edge_count(); ++e) players.push_back(e);
  }
  return players;
}

// player index of each vertex id, -1 for s, t.
std::vector<int> vertex_player_index(const GameSpec& spec) {
  std::vector<int> idx(spec.graph.vertex_count, -1);
  for (int k = 0; k < spec.player_count(); ++k) idx[spec.players[k]] = k;
  return idx;
}

int primal_simple_value(Family primal, const GameSpec& spec,
                        const Coalition& s) {
  const Graph& g = spec.graph;
  if (primal == Family::Epcg) {
    std::vector<bool> enabled(g.edge_count(), false);
    for (int k = 0; k < spec.player_count(); ++k)
      if (s.contains(k)) enabled[spec.players[k]] = true;
    return st_connected(g, enabled) ? 1 : 0;
  }
  // Vpcg: edges among S ∪ {s,t}.
  std::vector<bool> vertex_on(g.vertex_count, false);
  vertex_on[g.source] = vertex_on[g.sink] = true;
  for (int k = 0; k < spec.player_count(); ++k)
    if (s.contains(k)) vertex_on[spec.players[k]] = true;
  std::vector<bool> enabled(g.edge_count(), false);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    enabled[e] = vertex_on[u] && vertex_on[v];
  }
  return st_connected(g, enabled) ? 1 : 0;
}

}  // namespace

int simple_value(const GameSpec& spec, const Coalition& s) {
  assert(s.player_count() == spec.player_count());
  if (!is_dual(spec.family))
    return primal_simple_value(spec.family, spec, s);
  Family primal = dual_of(spec.family);
  // v^D(S) = v(N) - v(N \ S), and v(N) = 1 for a valid spec.
  return 1 - primal_simple_value(primal, spec, s.complement());
}

WinningCoalition min_weight_winning_coalition(
    const GameSpec& spec, const std::vector<ExtRational>& w) {
  assert(static_cast<int>(w.size()) == spec.player_count());
  const Graph& g = spec.graph;
  Coalition s(spec.player_count());

  switch (spec.family) {
    case Family::Epcg: {
      auto path = shortest_path(g, w);
      if (!path) throw GameError(GameError::Code::NoWinningCoalition,
                                 "no s-t path through finite-weight edges");
      for (int e : path->edges) s.add(e);
      return {s, path->weight};
    }
    case Family::EpcgDual: {
      CutResult cut = min_edge_cut(g, w);
      if (cut.weight.is_infinite())
        throw GameError(GameError::Code::NoWinningCoalition,
                        "no finite-weight edge cut");
      for (int e : cut.edges) s.add(e);
      return {s, cut.weight};
    }
    case Family::Vpcg: {
      std::vector<ExtRational> vw(g.vertex_count, ExtRational(0));
      for (int k = 0; k < spec.player_count(); ++k) vw[spec.players[k]] = w[k];
      auto path = shortest_vertex_path(g, vw);
      if (!path) throw GameError(GameError::Code::NoWinningCoalition,
                                 "no s-t path through finite-weight vertices");
      auto idx = vertex_player_index(spec);
      for (int v : path->vertices) s.add(idx[v]);
      return {s, path->weight};
    }
    case Family::VpcgDual: {
      std::vector<ExtRational> vw(g.vertex_count, ExtRational(0));
      for (int k = 0; k < spec.player_count(); ++k) vw[spec.players[k]] = w[k];
      auto cut = min_vertex_cut(g, vw);
      if (!cut || cut->weight.is_infinite())
        throw GameError(GameError::Code::NoWinningCoalition,
                        "no finite-weight vertex cut");
      auto idx = vertex_player_index(spec);
      for (int v : cut->vertices) s.add(idx[v]);
      return {s, cut->weight};
    }
  }
  throw std::logic_error("unknown family");
}

ExtRational cost_value(const GameSpec& spec, const Coalition& s) {
  if (simple_value(spec, s) == 0) return ExtRational(0);
  // Restrict to S by pricing non-members at +inf.
  std::vector<ExtRational> w(spec.player_count(), ExtRational::infinity());
  for (int k = 0; k < spec.player_count(); ++k)
    if (s.contains(k)) w[k] = spec.costs[k];
  WinningCoalition best = min_weight_winning_coalition(spec, w);
  return spec.reward - best.weight;
}

ExtRational grand_value(const GameSpec& spec) {
  return spec.reward - min_weight_winning_coalition(spec, spec.costs).weight;
}

GameSpec dual_family(const GameSpec& spec) {
  GameSpec d = spec;
  d.family = dual_of(spec.family);
  return d;
}

GameSpec GameSpec::make(Family family, Graph graph,
                        std::vector<ExtRational> costs, ExtRational reward) {
  graph.validate();
  GameSpec spec;
  spec.family = family;
  spec.graph = std::move(graph);
  spec.players = players_of(family, spec.graph);
  spec.costs = std::move(costs);
  spec.reward = std::move(reward);

  if (static_cast<int>(spec.costs.size()) != spec.player_count())
    throw std::invalid_argument("one cost per player required");
  for (const auto& c : spec.costs) {
    if (c.is_infinite())
      throw GameError(GameError::Code::InfiniteCost, "costs must be finite");
    if (c.is_negative())
      throw GameError(GameError::Code::NegativeCost, "negative cost");
  }
  if (spec.reward.is_infinite() || spec.reward.is_negative())
    throw GameError(GameError::Code::NegativeReward,
                    "reward must be finite and nonnegative");
  if (spec.player_count() > 64)
    throw GameError(GameError::Code::TooManyPlayers, "more than 64 players");

  if (is_vertex_family(family) && spec.graph.has_direct_st_edge())
    throw GameError(GameError::Code::VpcgDirectEdge,
                    "direct (s,t) edge makes the empty coalition winning");
  // v(N) = 1 for the primal simple game: an s-t path must exist.
  if (!st_connected(spec.graph,
                    std::vector<bool>(spec.graph.edge_count(), true)))
    throw GameError(GameError::Code::NoWinningCoalition,
                    "grand coalition is losing: no s-t path");
  if (grand_value(spec).is_negative())
    throw GameError(GameError::Code::NegativeGrandValue,
                    "reward below the cheapest winning coalition's cost");
  return spec;
}

GameSpec GameSpec::make_simple(Family family, Graph graph) {
  auto n = players_of(family, graph).size();
  return make(family, std::move(graph),
              std::vector<ExtRational>(n, ExtRational(0)), ExtRational(1));
}

}  // namespace pathgames
