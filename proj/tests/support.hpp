// Shared test utilities: independent brute-force oracles (plain subset and
// path enumeration, no Dijkstra/flow/LP) and deterministic random instances.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "pathgames/game.hpp"
#include "pathgames/graph.hpp"
#include "pathgames/sp.hpp"

namespace pgtest {

using namespace pathgames;

// Reachability by plain DFS, independent of the library's BFS helper.
inline bool reaches(const Graph& g, const std::vector<bool>& edge_on) {
  std::vector<bool> seen(g.vertex_count, false);
  std::vector<int> stack{g.source};
  seen[g.source] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!edge_on[e]) continue;
      auto [a, b] = g.edges[e];
      int to = a == u ? b : (!g.directed && b == u ? a : -1);
      if (to >= 0 && !seen[to]) {
        seen[to] = true;
        stack.push_back(to);
      }
    }
  }
  return seen[g.sink];
}

// Every simple s-t path, as an edge-id list.
inline void enumerate_paths_rec(const Graph& g, int u,
                                std::vector<bool>& vertex_used,
                                std::vector<int>& edges,
                                std::vector<std::vector<int>>& out) {
  if (u == g.sink) {
    out.push_back(edges);
    return;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edges[e];
    int to = a == u ? b : (!g.directed && b == u ? a : -1);
    if (to < 0 || vertex_used[to]) continue;
    vertex_used[to] = true;
    edges.push_back(e);
    enumerate_paths_rec(g, to, vertex_used, edges, out);
    edges.pop_back();
    vertex_used[to] = false;
  }
}

inline std::vector<std::vector<int>> enumerate_simple_paths(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> used(g.vertex_count, false);
  used[g.source] = true;
  std::vector<int> edges;
  enumerate_paths_rec(g, g.source, used, edges, out);
  return out;
}

inline std::optional<ExtRational> brute_min_path_weight(
    const Graph& g, const std::vector<ExtRational>& w) {
  std::optional<ExtRational> best;
  for (const auto& path : enumerate_simple_paths(g)) {
    ExtRational total(0);
    bool ok = true;
    for (int e : path) {
      if (w[e].is_infinite()) {
        ok = false;
        break;
      }
      total += w[e];
    }
    if (ok && (!best || total < *best)) best = total;
  }
  return best;
}

// Minimum weight over all edge subsets whose removal disconnects s from t.
inline std::optional<ExtRational> brute_min_edge_cut_weight(
    const Graph& g, const std::vector<ExtRational>& w) {
  int m = g.edge_count();
  std::optional<ExtRational> best;
  for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << m); ++cut) {
    std::vector<bool> on(m, true);
    ExtRational total(0);
    bool finite = true;
    for (int e = 0; e < m; ++e) {
      if ((cut >> e) & 1) {
        on[e] = false;
        if (w[e].is_infinite()) finite = false;
        else total += w[e];
      }
    }
    if (!finite || reaches(g, on)) continue;
    if (!best || total < *best) best = total;
  }
  return best;
}

inline std::optional<int> brute_min_edge_cut_cardinality(const Graph& g) {
  std::vector<ExtRational> unit(g.edge_count(), ExtRational(1));
  auto w = brute_min_edge_cut_weight(g, unit);
  if (!w) return std::nullopt;
  return static_cast<int>(w->value().get_num().get_si());
}

// Minimum weight over internal-vertex subsets whose removal disconnects s,t.
inline std::optional<ExtRational> brute_min_vertex_cut_weight(
    const Graph& g, const std::vector<ExtRational>& vw) {
  std::vector<int> internal;
  for (int v = 0; v < g.vertex_count; ++v)
    if (v != g.source && v != g.sink) internal.push_back(v);
  int k = static_cast<int>(internal.size());
  std::optional<ExtRational> best;
  for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << k); ++cut) {
    std::vector<bool> vertex_on(g.vertex_count, true);
    ExtRational total(0);
    for (int i = 0; i < k; ++i) {
      if ((cut >> i) & 1) {
        vertex_on[internal[i]] = false;
        total += vw[internal[i]];
      }
    }
    std::vector<bool> edge_on(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.edges[e];
      edge_on[e] = vertex_on[a] && vertex_on[b];
    }
    if (reaches(g, edge_on)) continue;
    if (!best || total < *best) best = total;
  }
  return best;
}

inline std::optional<int> brute_min_vertex_cut_cardinality(const Graph& g) {
  std::vector<ExtRational> unit(g.vertex_count, ExtRational(1));
  auto w = brute_min_vertex_cut_weight(g, unit);
  if (!w) return std::nullopt;
  return static_cast<int>(w->value().get_num().get_si());
}

// Exhaustive minimum-weight winning coalition by definition.
inline std::optional<ExtRational> brute_mwwc_weight(
    const GameSpec& spec, const std::vector<ExtRational>& w) {
  int n = spec.player_count();
  std::optional<ExtRational> best;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Coalition s = Coalition::from_mask(n, m);
    if (simple_value(spec, s) != 1) continue;
    ExtRational total(0);
    bool finite = true;
    for (int i = 0; i < n && finite; ++i) {
      if (!s.contains(i)) continue;
      if (w[i].is_infinite()) finite = false;
      else total += w[i];
    }
    if (finite && (!best || total < *best)) best = total;
  }
  return best;
}

// ---- deterministic random instances ----

inline ExtRational random_rational01(std::mt19937_64& rng) {
  int den = static_cast<int>(rng() % 8) + 1;
  int num = static_cast<int>(rng() % (den + 1));
  return ExtRational(num, den);
}

// Connected-enough random multigraph: guaranteed s-t path, no self-loops.
inline Graph random_graph(std::mt19937_64& rng, int max_edges, bool directed,
                          bool forbid_st_edge = false) {
  while (true) {
    Graph g;
    g.directed = directed;
    g.vertex_count = 2 + static_cast<int>(rng() % 5);
    g.source = 0;
    g.sink = 1;
    int m = 1 + static_cast<int>(rng() % max_edges);
    for (int e = 0; e < m; ++e) {
      int u = static_cast<int>(rng() % g.vertex_count);
      int v = static_cast<int>(rng() % g.vertex_count);
      if (u == v) {
        --e;
        continue;
      }
      g.edges.push_back({u, v});
    }
    if (forbid_st_edge && g.has_direct_st_edge()) continue;
    if (static_cast<int>(g.edges.size()) > max_edges) continue;
    if (!reaches(g, std::vector<bool>(g.edge_count(), true))) continue;
    return g;
  }
}

// Random series-parallel decomposition tree with the given leaf budget,
// expanded to an undirected two-terminal graph.
inline std::unique_ptr<SPTree> random_sp_tree(std::mt19937_64& rng, int leaves,
                                              int& next_edge, int& next_vertex,
                                              int source, int sink) {
  auto t = std::make_unique<SPTree>();
  t->source = source;
  t->sink = sink;
  if (leaves == 1) {
    t->kind = SPTree::Kind::Leaf;
    t->edge = next_edge++;
    return t;
  }
  int left = 1 + static_cast<int>(rng() % (leaves - 1));
  bool series = rng() % 2 == 0;
  if (series) {
    t->kind = SPTree::Kind::Series;
    int mid = next_vertex++;
    t->left = random_sp_tree(rng, left, next_edge, next_vertex, source, mid);
    t->right = random_sp_tree(rng, leaves - left, next_edge, next_vertex, mid, sink);
  } else {
    t->kind = SPTree::Kind::Parallel;
    t->left = random_sp_tree(rng, left, next_edge, next_vertex, source, sink);
    t->right = random_sp_tree(rng, leaves - left, next_edge, next_vertex, source, sink);
  }
  return t;
}

inline Graph random_sp_graph(std::mt19937_64& rng, int max_edges) {
  int leaves = 1 + static_cast<int>(rng() % max_edges);
  int next_edge = 0, next_vertex = 2;
  auto tree = random_sp_tree(rng, leaves, next_edge, next_vertex, 0, 1);
  return sp_expand(*tree);
}

// ---- fixed fixtures ----

// s=0, t=1, internal a=2, b=3; edges sa, at, sb, bt.
inline Graph diamond(bool directed = false) {
  Graph g;
  g.directed = directed;
  g.vertex_count = 4;
  g.source = 0;
  g.sink = 1;
  g.edges = {{0, 2}, {2, 1}, {0, 3}, {3, 1}};
  return g;
}

inline Graph parallel_edges(int count, bool directed = false) {
  Graph g;
  g.directed = directed;
  g.vertex_count = 2;
  g.source = 0;
  g.sink = 1;
  for (int i = 0; i < count; ++i) g.edges.push_back({0, 1});
  return g;
}

inline Graph path_graph(int internal, bool directed = false) {
  // s=0, t=1, internal 2..internal+1 in a chain.
  Graph g;
  g.directed = directed;
  g.vertex_count = 2 + internal;
  g.source = 0;
  g.sink = 1;
  int prev = 0;
  for (int i = 0; i < internal; ++i) {
    g.edges.push_back({prev, 2 + i});
    prev = 2 + i;
  }
  g.edges.push_back({prev, 1});
  return g;
}

inline std::vector<ExtRational> weights(std::initializer_list<ExtRational> ws) {
  return std::vector<ExtRational>(ws);
}

}  // namespace pgtest
