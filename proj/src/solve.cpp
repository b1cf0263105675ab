#include "pathgames/solve.hpp"

#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "pathgames/lp.hpp"

namespace pathgames {

namespace {

bool costless_unit_reward(const GameSpec& spec) {
  if (!(spec.reward == ExtRational(1))) return false;
  for (const auto& c : spec.costs)
    if (!c.is_zero()) return false;
  return true;
}

bool connected_without_edge(const Graph& g, int skip) {
  std::vector<bool> on(g.edge_count(), true);
  on[skip] = false;
  return st_connected(g, on);
}

bool connected_without_vertex(const Graph& g, int skip) {
  std::vector<bool> on(g.edge_count(), true);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == skip || v == skip) on[e] = false;
  }
  return st_connected(g, on);
}

}  // namespace

CoreResult core_nonempty(const GameSpec& spec) {
  const Graph& g = spec.graph;
  switch (spec.family) {
    case Family::Epcg:
      for (int e = 0; e < g.edge_count(); ++e)
        if (!connected_without_edge(g, e)) return {true, e};
      return {false, std::nullopt};
    case Family::Vpcg:
      for (int v = 0; v < g.vertex_count; ++v) {
        if (v == g.source || v == g.sink) continue;
        if (!connected_without_vertex(g, v)) return {true, v};
      }
      return {false, std::nullopt};
    case Family::EpcgDual:
      for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        bool st = (u == g.source && v == g.sink) ||
                  (!g.directed && u == g.sink && v == g.source);
        if (st) return {true, e};
      }
      return {false, std::nullopt};
    case Family::VpcgDual:
      for (int x = 0; x < g.vertex_count; ++x) {
        if (x == g.source || x == g.sink) continue;
        bool from_s = false, to_t = false;
        for (const auto& [u, v] : g.edges) {
          if ((u == g.source && v == x) ||
              (!g.directed && u == x && v == g.source))
            from_s = true;
          if ((u == x && v == g.sink) ||
              (!g.directed && u == g.sink && v == x))
            to_t = true;
        }
        if (from_s && to_t) return {true, x};
      }
      return {false, std::nullopt};
  }
  throw std::logic_error("unknown family");
}

SeparationResult separation_oracle(const GameSpec& spec, const PayoffVector& x,
                                   const ExtRational& eps) {
  int n = spec.player_count();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("payoff size mismatch");
  for (const auto& xi : x)
    if (xi.is_negative() || xi.is_infinite())
      throw std::invalid_argument("payoffs must be finite and nonnegative");

  std::vector<ExtRational> priced(n);
  for (int i = 0; i < n; ++i) priced[i] = x[i] + spec.costs[i];
  WinningCoalition best = min_weight_winning_coalition(spec, priced);
  ExtRational excess = best.weight - spec.reward;  // x'(S*) - r
  if (!(excess < -eps)) return SeparationFeasible{};
  return SeparationViolated{best.coalition, excess};
}

LeastCoreResult least_core(const GameSpec& spec) {
  int n = spec.player_count();
  Rat vN = grand_value(spec).value();

  // Master over x_0..x_{n-1} and epsilon; rows are added per coalition.
  LinearProgram master = LinearProgram::make(n + 1);
  master.objective[n] = 1;
  {
    std::vector<Rat> eff(n + 1, Rat(1));
    eff[n] = 0;
    master.add_row(std::move(eff), Rel::Eq, vN);
  }

  std::set<std::uint64_t> generated;
  std::map<std::uint64_t, Rat> values;  // v^c of generated coalitions
  auto add_coalition = [&](const Coalition& s) {
    if (s.empty() || !generated.insert(s.mask()).second) return false;
    Rat v = cost_value(spec, s).value();
    values[s.mask()] = v;
    std::vector<Rat> row(n + 1, Rat(0));
    for (int i = 0; i < n; ++i)
      if (s.contains(i)) row[i] = 1;
    row[n] = 1;  // + epsilon
    master.add_row(std::move(row), Rel::Ge, v);
    return true;
  };

  // Seeds: singletons plus the cheapest winning coalition on raw costs.
  for (int i = 0; i < n; ++i)
    add_coalition(Coalition::from_mask(n, std::uint64_t{1} << i));
  add_coalition(min_weight_winning_coalition(spec, spec.costs).coalition);

  LeastCoreResult res;
  while (true) {
    LpSolution sol = solve_lp(master);
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error("least-core master LP must be solvable");
    ++res.iterations;
    PayoffVector x;
    for (int i = 0; i < n; ++i) x.push_back(ExtRational(sol.values[i]));
    ExtRational eps(sol.values[n]);

    SeparationResult sep = separation_oracle(spec, x, eps);
    if (std::holds_alternative<SeparationFeasible>(sep)) {
      res.epsilon1 = eps;
      res.payoff = std::move(x);
      for (const auto& [mask, v] : values) {
        Rat xs = 0;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) xs += sol.values[i];
        if (xs - v == -sol.values[n])
          res.tight_coalitions.push_back(Coalition::from_mask(n, mask));
      }
      return res;
    }
    const auto& violated = std::get<SeparationViolated>(sep);
    if (!add_coalition(violated.coalition))
      throw std::logic_error("separation oracle regenerated a coalition");
  }
}

EpsilonCoreStatus in_epsilon_core(const GameSpec& spec, const PayoffVector& x,
                                  const ExtRational& eps) {
  ExtRational sum(0);
  for (const auto& xi : x) sum += xi;
  if (!(sum == grand_value(spec))) return EpsilonCoreStatus::NotEfficient;
  SeparationResult sep = separation_oracle(spec, x, eps);
  return std::holds_alternative<SeparationFeasible>(sep)
             ? EpsilonCoreStatus::Member
             : EpsilonCoreStatus::NotMember;
}

LeastCoreResult combinatorial_least_core(const GameSpec& spec) {
  if (is_dual(spec.family))
    throw std::invalid_argument(
        "closed form covers EPCG/VPCG only; duals go through least_core");
  if (!costless_unit_reward(spec))
    throw std::invalid_argument("closed form requires zero costs and r = 1");

  int n = spec.player_count();
  Coalition cut(n);
  if (spec.family == Family::Epcg) {
    std::vector<ExtRational> unit(spec.graph.edge_count(), ExtRational(1));
    CutResult c = min_edge_cut(spec.graph, unit);
    for (int e : c.edges) cut.add(e);
  } else {
    std::vector<ExtRational> unit(spec.graph.vertex_count, ExtRational(1));
    auto c = min_vertex_cut(spec.graph, unit);
    assert(c);  // validated: no direct (s,t) edge
    std::vector<int> idx(spec.graph.vertex_count, -1);
    for (int k = 0; k < n; ++k) idx[spec.players[k]] = k;
    for (int v : c->vertices) cut.add(idx[v]);
  }

  int c = cut.size();
  assert(c >= 1);
  LeastCoreResult res;
  res.epsilon1 = ExtRational(1) - ExtRational(1, c);
  res.payoff.assign(n, ExtRational(0));
  for (int i = 0; i < n; ++i)
    if (cut.contains(i)) res.payoff[i] = ExtRational(1, c);
  res.tight_coalitions.push_back(cut);
  res.iterations = 0;
  return res;
}

MaxminResult maxmin_intercept(const Graph& g, InterceptMode mode,
                              const std::vector<ExtRational>& p) {
  g.validate();
  bool edge_mode = mode == InterceptMode::Edge;
  int slots = edge_mode ? g.edge_count() : g.vertex_count;
  if (static_cast<int>(p.size()) != slots)
    throw std::invalid_argument("one detection probability per edge/vertex");

  std::vector<int> strategy_ids;  // edge ids, or internal vertex ids
  for (int i = 0; i < slots; ++i) {
    if (!edge_mode && (i == g.source || i == g.sink)) continue;
    if (p[i].is_infinite() || !(p[i] > ExtRational(0)) ||
        p[i] > ExtRational(1))
      throw std::invalid_argument("detection probabilities must be in (0,1]");
    strategy_ids.push_back(i);
  }
  if (!edge_mode && g.has_direct_st_edge())
    throw std::invalid_argument("vertex mode requires no direct (s,t) edge");

  // Re-weight by 1/p and cut.
  std::vector<ExtRational> priced(slots, ExtRational(0));
  for (int i : strategy_ids) priced[i] = p[i].reciprocal();

  std::vector<int> support;
  ExtRational cut_weight;
  if (edge_mode) {
    CutResult cut = min_edge_cut(g, priced);
    support = cut.edges;
    cut_weight = cut.weight;
  } else {
    auto cut = min_vertex_cut(g, priced);
    assert(cut);
    support = cut->vertices;
    cut_weight = cut->weight;
  }
  assert(!cut_weight.is_infinite() && !cut_weight.is_zero());

  MaxminResult res;
  res.value = cut_weight.reciprocal();
  res.support = support;
  res.strategy.assign(slots, ExtRational(0));
  for (int i : support)
    res.strategy[i] = priced[i] * res.value;  // (1/p_i) / sum of 1/p over cut

  // Certify against the exact LP optimum via path-constraint generation.
  int n = static_cast<int>(strategy_ids.size());
  std::vector<int> var_of(slots, -1);
  for (int k = 0; k < n; ++k) var_of[strategy_ids[k]] = k;

  LinearProgram lp = LinearProgram::make(n + 1, /*maximize=*/true);
  lp.objective[n] = 1;          // alpha
  lp.upper[n] = Rat(1);
  {
    std::vector<Rat> row(n + 1, Rat(1));
    row[n] = 0;
    lp.add_row(std::move(row), Rel::Eq, Rat(1));
  }
  std::set<std::vector<int>> seen_paths;
  while (true) {
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error("maxmin LP must be solvable");

    std::vector<ExtRational> w(slots, ExtRational(0));
    for (int k = 0; k < n; ++k)
      w[strategy_ids[k]] = p[strategy_ids[k]] * ExtRational(sol.values[k]);
    std::vector<int> members;
    ExtRational path_weight;
    if (edge_mode) {
      auto path = shortest_path(g, w);
      assert(path);
      members = path->edges;
      path_weight = path->weight;
    } else {
      std::vector<ExtRational> vw = w;
      auto path = shortest_vertex_path(g, vw);
      assert(path);
      members = path->vertices;
      path_weight = path->weight;
    }
    if (!(path_weight < ExtRational(sol.values[n]))) {
      if (!(ExtRational(sol.objective) == res.value))
        throw std::logic_error(
            "maxmin cut construction disagrees with the LP optimum");
      return res;
    }
    std::sort(members.begin(), members.end());
    if (!seen_paths.insert(members).second)
      throw std::logic_error("maxmin separation regenerated a path");
    std::vector<Rat> row(n + 1, Rat(0));
    for (int id : members) row[var_of[id]] = p[id].value();
    row[n] = -1;
    lp.add_row(std::move(row), Rel::Ge, Rat(0));
  }
}

}  // namespace pathgames
