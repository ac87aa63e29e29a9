#include "skewmaps/graph.hpp"

#include <algorithm>
#include <functional>

#include "skewmaps/cayley_map.hpp"

namespace skewmaps {

int SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return static_cast<int>(twice / 2);
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& nb = adj[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

SimpleGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g;
  g.adj.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

SimpleGraph cayley_graph(const CayleyMap& m) {
  const FiniteGroup& g = m.group();
  std::vector<std::pair<int, int>> edges;
  for (Elem v = 0; v < g.order(); ++v)
    for (Elem x : m.rotation()) edges.emplace_back(v, g.mul(v, x));
  return graph_from_edges(g.order(), edges);
}

SimpleGraph complete_multipartite(int parts, int size) {
  std::vector<std::pair<int, int>> edges;
  const int n = parts * size;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / size != v / size) edges.emplace_back(u, v);
  return graph_from_edges(n, edges);
}

SimpleGraph complete_bipartite(int size) { return complete_multipartite(2, size); }

SimpleGraph hypercube(int dim) {
  std::vector<std::pair<int, int>> edges;
  const int n = 1 << dim;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < dim; ++b)
      if (u < (u ^ (1 << b))) edges.emplace_back(u, u ^ (1 << b));
  return graph_from_edges(n, edges);
}

bool is_connected(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : g.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

std::optional<std::vector<int>> graph_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  auto degrees = [](const SimpleGraph& g) {
    std::vector<int> d;
    for (const auto& nb : g.adj) d.push_back(static_cast<int>(nb.size()));
    return d;
  };
  const auto d1 = degrees(g1), d2 = degrees(g2);
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  // Visit g1 in breadth-first order so each new vertex has mapped neighbours.
  std::vector<int> order;
  std::vector<char> queued(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (queued[s]) continue;
    queued[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (int v : g1.adj[order[i]])
        if (!queued[v]) {
          queued[v] = 1;
          order.push_back(v);
        }
  }
  std::vector<int> f(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || d2[w] != d1[u]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const int v = order[j];
        ok = g1.has_edge(u, v) == g2.has_edge(w, f[v]);
      }
      if (!ok) continue;
      f[u] = w;
      used[w] = 1;
      if (rec(depth + 1)) return true;
      used[w] = 0;
      f[u] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return f;
}

}  // namespace skewmaps
