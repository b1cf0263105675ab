#include "pathgames/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace pathgames {

namespace {

// Incident arcs (edge id, other endpoint) per vertex, ascending edge id.
std::vector<std::vector<std::pair<int, int>>> out_arcs(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    adj[u].push_back({e, v});
    if (!g.directed) adj[v].push_back({e, u});
  }
  return adj;
}

}  // namespace

bool st_connected(const Graph& g, const std::vector<bool>& edge_enabled) {
  std::vector<bool> seen(g.vertex_count, false);
  std::deque<int> queue{g.source};
  seen[g.source] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == g.sink) return true;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!edge_enabled[e]) continue;
      auto [a, b] = g.edges[e];
      int to = -1;
      if (a == u) to = b;
      else if (!g.directed && b == u) to = a;
      if (to >= 0 && !seen[to]) {
        seen[to] = true;
        queue.push_back(to);
      }
    }
  }
  return false;
}

std::optional<PathResult> shortest_path(const Graph& g,
                                        const std::vector<ExtRational>& w) {
  g.validate();
  assert(static_cast<int>(w.size()) == g.edge_count());
  for (const auto& x : w)
    if (x.is_negative()) throw GraphError("negative edge weight");

  auto adj = out_arcs(g);
  int n = g.vertex_count;
  std::vector<ExtRational> dist(n, ExtRational::infinity());
  std::vector<int> pred_edge(n, -1), pred_vertex(n, -1);
  std::vector<bool> done(n, false);
  dist[g.source] = ExtRational(0);

  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v] || dist[v].is_infinite()) continue;
      if (u == -1 || dist[v] < dist[u]) u = v;
    }
    if (u == -1) break;
    done[u] = true;
    if (u == g.sink) break;
    for (const auto& [e, to] : adj[u]) {
      if (w[e].is_infinite() || done[to]) continue;
      ExtRational cand = dist[u] + w[e];
      if (cand < dist[to]) {
        dist[to] = cand;
        pred_edge[to] = e;
        pred_vertex[to] = u;
      }
    }
  }

  if (dist[g.sink].is_infinite()) return std::nullopt;
  PathResult res;
  res.weight = dist[g.sink];
  for (int v = g.sink; v != g.source; v = pred_vertex[v])
    res.edges.push_back(pred_edge[v]);
  std::reverse(res.edges.begin(), res.edges.end());
  return res;
}

namespace {

struct Arc {
  int to;
  ExtRational residual;
  int rev;        // index of the reverse arc
  int edge_id;    // original edge, -1 for pure reverse arcs
};

struct FlowNet {
  std::vector<std::vector<Arc>> arcs;

  void add_pair(int u, int v, const ExtRational& cap_uv,
                const ExtRational& cap_vu, int edge_id) {
    Arc a{v, cap_uv, static_cast<int>(arcs[v].size()), edge_id};
    Arc b{u, cap_vu, static_cast<int>(arcs[u].size()), edge_id};
    arcs[u].push_back(a);
    arcs[v].push_back(b);
  }
};

}  // namespace

CutResult min_edge_cut(const Graph& g, const std::vector<ExtRational>& w) {
  g.validate();
  assert(static_cast<int>(w.size()) == g.edge_count());
  for (const auto& x : w)
    if (x.is_negative()) throw GraphError("negative edge weight");

  if (!st_connected(g, std::vector<bool>(g.edge_count(), true)))
    return {{}, ExtRational(0)};

  FlowNet net;
  net.arcs.resize(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (g.directed) {
      net.add_pair(u, v, w[e], ExtRational(0), e);
    } else {
      // Antiparallel arcs sharing capacity: each starts at w[e].
      net.add_pair(u, v, w[e], w[e], e);
    }
  }

  // Edmonds-Karp: shortest augmenting paths by arc count.
  bool infinite_flow = false;
  while (true) {
    std::vector<std::pair<int, int>> pred(g.vertex_count, {-1, -1});
    std::vector<bool> seen(g.vertex_count, false);
    std::deque<int> queue{g.source};
    seen[g.source] = true;
    while (!queue.empty() && !seen[g.sink]) {
      int u = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(net.arcs[u].size()); ++i) {
        const Arc& a = net.arcs[u][i];
        if (a.residual.is_zero() || seen[a.to]) continue;
        seen[a.to] = true;
        pred[a.to] = {u, i};
        queue.push_back(a.to);
      }
    }
    if (!seen[g.sink]) break;

    ExtRational bottleneck = ExtRational::infinity();
    for (int v = g.sink; v != g.source; v = pred[v].first) {
      const Arc& a = net.arcs[pred[v].first][pred[v].second];
      if (a.residual < bottleneck) bottleneck = a.residual;
    }
    if (bottleneck.is_infinite()) {
      infinite_flow = true;
      break;
    }
    for (int v = g.sink; v != g.source; v = pred[v].first) {
      Arc& a = net.arcs[pred[v].first][pred[v].second];
      Arc& r = net.arcs[a.to][a.rev];
      a.residual = a.residual - bottleneck;
      r.residual = r.residual + bottleneck;
    }
  }

  if (infinite_flow) return {{}, ExtRational::infinity()};

  // Cut = original edges leaving the residual-reachable side of s.
  std::vector<bool> side(g.vertex_count, false);
  std::deque<int> queue{g.source};
  side[g.source] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const Arc& a : net.arcs[u]) {
      if (!a.residual.is_zero() && !side[a.to]) {
        side[a.to] = true;
        queue.push_back(a.to);
      }
    }
  }

  CutResult res;
  res.weight = ExtRational(0);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    bool crossing = g.directed ? (side[u] && !side[v])
                               : (side[u] != side[v]);
    if (crossing) {
      res.edges.push_back(e);
      res.weight += w[e];
    }
  }
  return res;
}

SplitGraph split_vertices(const Graph& g, const std::vector<ExtRational>& vw,
                          bool originals_infinite) {
  g.validate();
  assert(static_cast<int>(vw.size()) == g.vertex_count);
  SplitGraph sg;
  sg.graph.directed = true;
  sg.vertex_to_edge.assign(g.vertex_count, -1);

  std::vector<int> v_in(g.vertex_count), v_out(g.vertex_count);
  int next = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (v == g.source || v == g.sink) {
      v_in[v] = v_out[v] = next++;
    } else {
      v_in[v] = next++;
      v_out[v] = next++;
    }
  }
  sg.graph.vertex_count = next;
  sg.graph.source = v_out[g.source];
  sg.graph.sink = v_in[g.sink];

  ExtRational original_w =
      originals_infinite ? ExtRational::infinity() : ExtRational(0);
  auto add_edge = [&](int u, int v, const ExtRational& w, int orig_vertex) {
    sg.graph.edges.push_back({u, v});
    sg.weights.push_back(w);
    sg.edge_to_vertex.push_back(orig_vertex);
  };
  for (const auto& [u, v] : g.edges) {
    add_edge(v_out[u], v_in[v], original_w, -1);
    if (!g.directed) add_edge(v_out[v], v_in[u], original_w, -1);
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (v == g.source || v == g.sink) continue;
    sg.vertex_to_edge[v] = sg.graph.edge_count();
    add_edge(v_in[v], v_out[v], vw[v], v);
  }
  return sg;
}

std::optional<VertexPathResult> shortest_vertex_path(
    const Graph& g, const std::vector<ExtRational>& vw) {
  SplitGraph sg = split_vertices(g, vw, /*originals_infinite=*/false);
  auto path = shortest_path(sg.graph, sg.weights);
  if (!path) return std::nullopt;
  VertexPathResult res;
  res.weight = path->weight;
  for (int e : path->edges) {
    if (sg.edge_to_vertex[e] >= 0) res.vertices.push_back(sg.edge_to_vertex[e]);
  }
  return res;
}

std::optional<VertexCutResult> min_vertex_cut(const Graph& g,
                                              const std::vector<ExtRational>& vw) {
  g.validate();
  if (g.has_direct_st_edge()) return std::nullopt;
  SplitGraph sg = split_vertices(g, vw, /*originals_infinite=*/true);
  CutResult cut = min_edge_cut(sg.graph, sg.weights);
  assert(!cut.weight.is_infinite());
  VertexCutResult res;
  res.weight = cut.weight;
  for (int e : cut.edges) {
    assert(sg.edge_to_vertex[e] >= 0);
    res.vertices.push_back(sg.edge_to_vertex[e]);
  }
  std::sort(res.vertices.begin(), res.vertices.end());
  return res;
}

}  // namespace pathgames
