#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pathgames/rational.hpp"

namespace pathgames {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Directed or undirected multigraph with distinguished source and sink.
/// Vertex ids are 0..vertex_count-1, edge ids 0..|E|-1, both stable.
/// Self-loops are rejected (they can never lie on a simple s-t path).
struct Graph {
  bool directed = true;
  int vertex_count = 0;
  int source = 0;
  int sink = 1;
  std::vector<std::pair<int, int>> edges;  // (tail, head)

  int edge_count() const { return static_cast<int>(edges.size()); }

  void validate() const {
    if (vertex_count < 2) throw GraphError("graph needs at least s and t");
    if (source == sink) throw GraphError("source equals sink");
    auto ok = [&](int v) { return v >= 0 && v < vertex_count; };
    if (!ok(source) || !ok(sink)) throw GraphError("bad terminal id");
    for (const auto& [u, v] : edges) {
      if (!ok(u) || !ok(v)) throw GraphError("edge endpoint out of range");
      if (u == v) throw GraphError("self-loop");
    }
  }

  bool has_direct_st_edge() const {
    for (const auto& [u, v] : edges) {
      if (u == source && v == sink) return true;
      if (!directed && u == sink && v == source) return true;
    }
    return false;
  }
};

struct PathResult {
  std::vector<int> edges;  // edge ids from s to t
  ExtRational weight;
};

struct CutResult {
  std::vector<int> edges;  // ascending edge ids
  ExtRational weight;
};

/// Minimum-weight simple s-t path under nonnegative edge weights.
/// +inf edges are treated as absent. nullopt iff no path exists.
std::optional<PathResult> shortest_path(const Graph& g,
                                        const std::vector<ExtRational>& w);

/// Minimum-weight s-t edge cut via max flow (Edmonds-Karp, exact rationals).
/// If no s-t path exists the empty cut of weight 0 is returned. If every cut
/// touches a +inf edge the weight is +inf and the edge list is empty.
CutResult min_edge_cut(const Graph& g, const std::vector<ExtRational>& w);

/// Vertex-splitting reduction: each internal vertex v becomes v_in -> v_out
/// joined by an internal edge carrying v's weight. Original edges get weight
/// +inf (cut variant) or 0 (path variant). Undirected inputs are oriented as
/// two antiparallel arcs.
struct SplitGraph {
  Graph graph;                       // always directed
  std::vector<ExtRational> weights;  // per edge of graph
  std::vector<int> vertex_to_edge;   // original vertex -> internal edge, -1 for s,t
  std::vector<int> edge_to_vertex;   // edge of graph -> original vertex, -1 if original
};

SplitGraph split_vertices(const Graph& g, const std::vector<ExtRational>& vw,
                          bool originals_infinite = true);

struct VertexPathResult {
  std::vector<int> vertices;  // internal vertices of the path, in order
  ExtRational weight;
};

std::optional<VertexPathResult> shortest_vertex_path(
    const Graph& g, const std::vector<ExtRational>& vw);

struct VertexCutResult {
  std::vector<int> vertices;  // ascending vertex ids
  ExtRational weight;
};

/// Minimum-weight internal-vertex s-t cut. nullopt iff a direct (s,t) edge
/// makes the graph uncuttable by vertices.
std::optional<VertexCutResult> min_vertex_cut(const Graph& g,
                                              const std::vector<ExtRational>& vw);

/// Is t reachable from s using only the given edges?
bool st_connected(const Graph& g, const std::vector<bool>& edge_enabled);

}  // namespace pathgames
