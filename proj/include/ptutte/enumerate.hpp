#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ptutte/bip_graph.hpp"
#include "ptutte/canonical.hpp"
#include "ptutte/multigraph.hpp"

namespace ptutte {

// K_{a,b}-indexed graph from an edge mask; A = 1..a, B = a+1..a+b.
inline BipGraph from_mask(int a, int b, std::uint64_t mask) {
  std::vector<VertexId> sa, sb;
  std::vector<IdEdge> edges;
  for (int i = 1; i <= a; ++i) sa.push_back(i);
  for (int j = 1; j <= b; ++j) sb.push_back(a + j);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (mask >> (i * b + j) & 1u) edges.emplace_back(i + 1, a + j + 1);
  return make_bipartite(sa, sb, edges);
}

// Every side-labeled bipartite graph with 1..max_vertices vertices, one per
// isomorphism class.
inline std::vector<BipGraph> bipartite_graphs(int max_vertices) {
  std::vector<BipGraph> out;
  for (int n = 1; n <= max_vertices; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      std::set<std::string> seen;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (a * b)); ++mask) {
        auto h = from_mask(a, b, mask);
        if (seen.insert(canonical_code(h).bytes).second) out.push_back(std::move(h));
      }
    }
  return out;
}

inline BipGraph random_bipartite(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> side(1, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int a = side(rng), b = n - a;
  const double p = 0.2 + 0.6 * unit(rng);
  std::uint64_t mask = 0;
  for (int k = 0; k < a * b; ++k)
    if (unit(rng) < p) mask |= std::uint64_t{1} << k;
  return from_mask(a, b, mask);
}

// Simple graphs on n vertices (0-based adjacency), one per isomorphism class,
// grown vertex by vertex.
inline std::vector<std::vector<std::vector<int>>> simple_graphs(int n) {
  std::vector<std::vector<std::vector<int>>> level{{{}}};
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<std::vector<int>>> next;
    std::set<std::string> seen;
    for (const auto& g : level)
      for (std::uint32_t nbrs = 0; nbrs < (1u << k); ++nbrs) {
        auto h = g;
        h.emplace_back();
        for (int v = 0; v < k; ++v)
          if (nbrs >> v & 1u) {
            h[v].push_back(k);
            h[k].push_back(v);
          }
        if (seen.insert(simple_graph_code(h)).second) next.push_back(std::move(h));
      }
    level = std::move(next);
  }
  return level;
}

inline MultiGraph to_multigraph(const std::vector<std::vector<int>>& adj) {
  std::vector<Endpoints> edges;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v)
    for (int w : adj[v])
      if (v < w) edges.emplace_back(v + 1, w + 1);
  return MultiGraph::make(static_cast<int>(adj.size()), edges);
}

// Isomorphism code of a multigraph: its vertex-edge incidence graph, with
// edges as a second colour, canonically labeled.
inline std::string multigraph_code(const MultiGraph& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<int> colors(static_cast<std::size_t>(n + m), 0);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n + m), 0);
  for (int k = 0; k < m; ++k) {
    colors[n + k] = 1;
    auto [u, v] = g.edges()[static_cast<std::size_t>(k)];
    for (int w : {u - 1, v - 1}) {
      adj[n + k] |= std::uint64_t{1} << w;
      adj[w] |= std::uint64_t{1} << (n + k);
    }
  }
  return detail::ColoredCanonizer(std::move(colors), std::move(adj)).run();
}

// Connected multigraphs (loops and parallel edges allowed) with 1..max_edges
// edges, one per isomorphism class. Each class is reached by adding a loop, an
// edge between existing vertices, or a pendant edge to a smaller one.
inline std::vector<MultiGraph> connected_multigraphs(int max_edges) {
  std::vector<MultiGraph> out, level{MultiGraph::make(1, {})};
  for (int m = 1; m <= max_edges; ++m) {
    std::vector<MultiGraph> next;
    std::set<std::string> seen;
    for (const auto& g : level) {
      const int n = g.vertex_count();
      auto consider = [&](int vertices, Endpoints e) {
        auto edges = g.edges();
        edges.push_back(e);
        auto h = MultiGraph::make(vertices, std::move(edges));
        if (seen.insert(multigraph_code(h)).second) next.push_back(std::move(h));
      };
      for (int u = 1; u <= n; ++u) {
        for (int v = u; v <= n; ++v) consider(n, {u, v});
        consider(n + 1, {u, n + 1});
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline MultiGraph random_connected_multigraph(std::mt19937_64& rng, int max_edges, bool allow_loops = true) {
  std::uniform_int_distribution<int> edge_count(1, max_edges);
  const int m = edge_count(rng);
  std::uniform_int_distribution<int> vertex_count(2, m + 1);
  const int n = vertex_count(rng);
  std::vector<Endpoints> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(1, v - 1)(rng), v);
  std::uniform_int_distribution<int> pick(1, n);
  while (static_cast<int>(edges.size()) < m) {
    int u = pick(rng), v = pick(rng);
    if (u == v && !allow_loops) continue;
    edges.emplace_back(u, v);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return MultiGraph::make(n, edges);
}

}  // namespace ptutte
