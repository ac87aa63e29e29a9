#pragma once

#include <optional>
#include <vector>

namespace skewmaps {

class CayleyMap;

struct SimpleGraph {
  std::vector<std::vector<int>> adj;  // sorted neighbour lists

  int vertex_count() const noexcept { return static_cast<int>(adj.size()); }
  int edge_count() const;
  bool has_edge(int u, int v) const;
};

SimpleGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
SimpleGraph cayley_graph(const CayleyMap& m);
SimpleGraph complete_multipartite(int parts, int size);
SimpleGraph complete_bipartite(int size);
SimpleGraph hypercube(int dim);

bool is_connected(const SimpleGraph& g);

// Vertex bijection f with uv an edge iff f(u)f(v) is.
std::optional<std::vector<int>> graph_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2);

}  // namespace skewmaps
