#include "pathgames/sp.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace pathgames {

namespace {

void flip(SPTree& t) {
  std::swap(t.source, t.sink);
  if (t.kind == SPTree::Kind::Series) {
    std::swap(t.left, t.right);
    flip(*t.left);
    flip(*t.right);
  } else if (t.kind == SPTree::Kind::Parallel) {
    flip(*t.left);
    flip(*t.right);
  }
}

// Make the tree's terminal pair read (u, v); flips if it reads (v, u).
void orient(SPTree& t, int u, int v) {
  if (t.source == u && t.sink == v) return;
  assert(t.source == v && t.sink == u);
  flip(t);
}

std::unique_ptr<SPTree> leaf(int edge, int u, int v) {
  auto t = std::make_unique<SPTree>();
  t->kind = SPTree::Kind::Leaf;
  t->edge = edge;
  t->source = u;
  t->sink = v;
  return t;
}

std::unique_ptr<SPTree> join(SPTree::Kind kind, std::unique_ptr<SPTree> l,
                             std::unique_ptr<SPTree> r, int u, int v) {
  auto t = std::make_unique<SPTree>();
  t->kind = kind;
  t->left = std::move(l);
  t->right = std::move(r);
  t->source = u;
  t->sink = v;
  return t;
}

struct WorkEdge {
  int u, v;
  std::unique_ptr<SPTree> tree;
  bool alive = true;
};

}  // namespace

SPDecomposeResult sp_decompose(const Graph& g) {
  g.validate();
  if (g.directed) throw GraphError("sp_decompose expects an undirected graph");

  // Prune vertices unreachable from s.
  std::vector<bool> reach(g.vertex_count, false);
  reach[g.source] = true;
  std::deque<int> queue{g.source};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const auto& [a, b] : g.edges) {
      int to = a == x ? b : (b == x ? a : -1);
      if (to >= 0 && !reach[to]) {
        reach[to] = true;
        queue.push_back(to);
      }
    }
  }

  std::vector<WorkEdge> work;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (!reach[u] || !reach[v]) continue;
    work.push_back({u, v, leaf(e, u, v), true});
  }

  auto remnant = [&] {
    Graph r;
    r.directed = false;
    r.vertex_count = g.vertex_count;
    r.source = g.source;
    r.sink = g.sink;
    for (const auto& we : work)
      if (we.alive) r.edges.push_back({we.u, we.v});
    return NotSeriesParallel{std::move(r)};
  };

  if (!reach[g.sink]) return remnant();

  while (true) {
    int alive = 0, last = -1;
    for (int i = 0; i < static_cast<int>(work.size()); ++i) {
      if (work[i].alive) {
        ++alive;
        last = i;
      }
    }
    if (alive == 1) {
      WorkEdge& we = work[last];
      if ((we.u == g.source && we.v == g.sink) ||
          (we.u == g.sink && we.v == g.source)) {
        orient(*we.tree, g.source, g.sink);
        return std::move(we.tree);
      }
      return remnant();
    }

    // Parallel merges first, in lexicographic (i, j) order.
    bool merged = false;
    for (int i = 0; i < static_cast<int>(work.size()) && !merged; ++i) {
      if (!work[i].alive) continue;
      for (int j = i + 1; j < static_cast<int>(work.size()) && !merged; ++j) {
        if (!work[j].alive) continue;
        bool same = (work[i].u == work[j].u && work[i].v == work[j].v) ||
                    (work[i].u == work[j].v && work[i].v == work[j].u);
        if (!same) continue;
        int u = work[i].u, v = work[i].v;
        orient(*work[j].tree, u, v);
        work[j].alive = false;
        work.push_back({u, v,
                        join(SPTree::Kind::Parallel, std::move(work[i].tree),
                             std::move(work[j].tree), u, v),
                        true});
        work[i].alive = false;
        merged = true;
      }
    }
    if (merged) continue;

    // Series merge at the lowest-id internal degree-2 vertex.
    for (int w = 0; w < g.vertex_count && !merged; ++w) {
      if (w == g.source || w == g.sink) continue;
      int i = -1, j = -1, degree = 0;
      for (int k = 0; k < static_cast<int>(work.size()); ++k) {
        if (!work[k].alive) continue;
        if (work[k].u == w || work[k].v == w) {
          ++degree;
          if (i < 0) i = k;
          else j = k;
        }
      }
      if (degree != 2) continue;
      int a = work[i].u == w ? work[i].v : work[i].u;
      int b = work[j].u == w ? work[j].v : work[j].u;
      assert(a != b);  // parallel merge would have applied
      orient(*work[i].tree, a, w);
      orient(*work[j].tree, w, b);
      work[j].alive = false;
      work.push_back({a, b,
                      join(SPTree::Kind::Series, std::move(work[i].tree),
                           std::move(work[j].tree), a, b),
                      true});
      work[i].alive = false;
      merged = true;
    }
    if (!merged) return remnant();
  }
}

namespace {

void collect(const SPTree& t,
             std::vector<std::pair<int, std::pair<int, int>>>& out) {
  if (t.kind == SPTree::Kind::Leaf) {
    out.push_back({t.edge, {t.source, t.sink}});
    return;
  }
  collect(*t.left, out);
  collect(*t.right, out);
}

}  // namespace

Graph sp_expand(const SPTree& tree) {
  std::vector<std::pair<int, std::pair<int, int>>> leaves;
  collect(tree, leaves);
  Graph g;
  g.directed = false;
  g.source = tree.source;
  g.sink = tree.sink;
  int max_v = std::max(tree.source, tree.sink);
  for (const auto& [e, uv] : leaves) max_v = std::max({max_v, uv.first, uv.second});
  g.vertex_count = max_v + 1;
  g.edges.assign(leaves.size(), {-1, -1});
  for (const auto& [e, uv] : leaves) {
    if (e < 0 || e >= static_cast<int>(leaves.size()) || g.edges[e].first != -1)
      throw GraphError("leaf edge ids must be 0..n-1, each once");
    g.edges[e] = uv;
  }
  g.validate();
  return g;
}

}  // namespace pathgames
