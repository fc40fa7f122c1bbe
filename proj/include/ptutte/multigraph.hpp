#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ptutte/bip_graph.hpp"
#include "ptutte/error.hpp"

namespace ptutte {

using Endpoints = std::pair<int, int>;
// A set of edge labels (1-based positions), kept sorted.
using EdgeLabels = std::vector<int>;

namespace detail {
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};
}  // namespace detail

// Multigraph on vertices 1..n; loops and repeated pairs are allowed. Edge k
// (1-based) is the k-th entry of the edge list and carries label k.
class MultiGraph {
 public:
  MultiGraph() = default;

  static MultiGraph make(int vertex_count, std::vector<Endpoints> edges) {
    if (vertex_count < 1) throw Error(ErrorCode::InvalidArgs, "multigraph needs at least one vertex");
    for (auto [u, v] : edges)
      if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
        throw Error(ErrorCode::UnknownVertex,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 1.." + std::to_string(vertex_count));
    MultiGraph g;
    g.n_ = vertex_count;
    g.edges_ = std::move(edges);
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Endpoints>& edges() const { return edges_; }
  const Endpoints& edge(int label) const { return edges_.at(static_cast<std::size_t>(label - 1)); }
  bool is_loop(int label) const { return edge(label).first == edge(label).second; }

  int component_count() const {
    detail::DisjointSets d(n_ + 1);
    int comps = n_;
    for (auto [u, v] : edges_)
      if (d.unite(u, v)) --comps;
    return comps;
  }
  bool is_connected() const { return component_count() == 1; }

  bool is_simple() const {
    std::vector<Endpoints> seen;
    for (auto [u, v] : edges_) {
      if (u == v) return false;
      seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  }

  // 0-based adjacency lists of the underlying simple graph.
  std::vector<std::vector<int>> simple_adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (auto [u, v] : edges_) {
      if (u == v) continue;
      adj[u - 1].push_back(v - 1);
      adj[v - 1].push_back(u - 1);
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
  }

 private:
  int n_ = 1;
  std::vector<Endpoints> edges_;
};

inline void require_connected(const MultiGraph& g) {
  if (!g.is_connected())
    throw Error(ErrorCode::Disconnected, "graph has " + std::to_string(g.component_count()) + " components");
}

inline void check_edge_label(const MultiGraph& g, int e) {
  if (e < 1 || e > g.edge_count()) throw Error(ErrorCode::UnknownEdge, "no edge with label " + std::to_string(e));
}

// Every spanning tree exactly once, each as the sorted labels of its n-1 edges.
inline std::vector<EdgeLabels> spanning_trees(const MultiGraph& g) {
  require_connected(g);
  std::vector<EdgeLabels> out;
  const int need = g.vertex_count() - 1;
  const int m = g.edge_count();
  EdgeLabels chosen;
  auto recurse = [&](auto&& self, int i, detail::DisjointSets dsu) -> void {
    if (static_cast<int>(chosen.size()) == need) {
      out.push_back(chosen);
      return;
    }
    if (m - i < need - static_cast<int>(chosen.size())) return;
    auto [u, v] = g.edges()[static_cast<std::size_t>(i)];
    if (u != v && dsu.find(u) != dsu.find(v)) {
      auto with = dsu;
      with.unite(u, v);
      chosen.push_back(i + 1);
      self(self, i + 1, std::move(with));
      chosen.pop_back();
    }
    self(self, i + 1, std::move(dsu));
  };
  recurse(recurse, 0, detail::DisjointSets(g.vertex_count() + 1));
  return out;
}

inline bool is_spanning_tree(const MultiGraph& g, EdgeLabels tree) {
  std::sort(tree.begin(), tree.end());
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) return false;
  if (std::adjacent_find(tree.begin(), tree.end()) != tree.end()) return false;
  detail::DisjointSets dsu(g.vertex_count() + 1);
  for (int e : tree) {
    if (e < 1 || e > g.edge_count()) return false;
    auto [u, v] = g.edge(e);
    if (!dsu.unite(u, v)) return false;
  }
  return true;
}

// Tree edges on the fundamental cycle of every non-tree edge, indexed by
// non-tree label. A loop's cycle holds no tree edge.
inline std::vector<std::pair<int, EdgeLabels>> fundamental_cycles(const MultiGraph& g, const EdgeLabels& tree) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n + 1));
  std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count() + 1), 0);
  for (int e : tree) {
    in_tree[e] = 1;
    auto [u, v] = g.edge(e);
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  std::vector<int> parent(static_cast<std::size_t>(n + 1), 0), parent_edge(static_cast<std::size_t>(n + 1), 0),
      depth(static_cast<std::size_t>(n + 1), -1), queue{1};
  depth[1] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int v = queue[k];
    for (auto [w, e] : adj[v])
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        parent_edge[w] = e;
        queue.push_back(w);
      }
  }
  std::vector<std::pair<int, EdgeLabels>> out;
  for (int f = 1; f <= g.edge_count(); ++f) {
    if (in_tree[f]) continue;
    auto [u, v] = g.edge(f);
    EdgeLabels path;
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      path.push_back(parent_edge[u]);
      u = parent[u];
    }
    std::sort(path.begin(), path.end());
    out.emplace_back(f, std::move(path));
  }
  return out;
}

// H[T]: side A holds the tree edge labels, side B the non-tree labels; tree
// edge e and non-tree edge f are adjacent iff e lies on f's fundamental cycle.
inline BipGraph local_basis_exchange(const MultiGraph& g, EdgeLabels tree) {
  if (!is_spanning_tree(g, tree)) throw Error(ErrorCode::NotSpanningTree, "edge set is not a spanning tree");
  std::sort(tree.begin(), tree.end());
  std::vector<VertexId> side_a(tree.begin(), tree.end()), side_b;
  std::vector<IdEdge> edges;
  for (auto& [f, cycle] : fundamental_cycles(g, tree)) {
    side_b.push_back(f);
    for (int e : cycle) edges.emplace_back(e, f);
  }
  return make_bipartite(side_a, side_b, edges);
}

inline MultiGraph delete_edge(const MultiGraph& g, int e) {
  check_edge_label(g, e);
  auto edges = g.edges();
  edges.erase(edges.begin() + (e - 1));
  return MultiGraph::make(g.vertex_count(), std::move(edges));
}

// Merges the endpoints of e. Parallel partners of e become loops; the other
// edges keep their relative order and vertices above the merged one shift down.
inline MultiGraph contract_edge(const MultiGraph& g, int e) {
  check_edge_label(g, e);
  auto [keep, gone] = g.edge(e);
  if (keep == gone) throw Error(ErrorCode::ContractLoop, "edge " + std::to_string(e) + " is a loop");
  if (gone < keep) std::swap(keep, gone);
  auto relabel = [&](int w) {
    if (w == gone) w = keep;
    return w > gone ? w - 1 : w;
  };
  std::vector<Endpoints> edges;
  for (int k = 1; k <= g.edge_count(); ++k)
    if (k != e) edges.emplace_back(relabel(g.edge(k).first), relabel(g.edge(k).second));
  return MultiGraph::make(g.vertex_count() - 1, std::move(edges));
}

}  // namespace ptutte
