#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ptutte/error.hpp"

namespace ptutte {

enum class Side : std::uint8_t { A, B };

constexpr Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

using VertexId = long;
using IdEdge = std::pair<VertexId, VertexId>;

// Bipartite graph H = (A, B, E) with an explicit side for every vertex.
//
// Vertices are stored by dense index: all A-vertices first (in the order they
// were declared), then all B-vertices. Adjacency lists hold indices and are
// sorted. The graph is immutable once built.
class BipGraph {
 public:
  BipGraph() = default;

  // Validating constructor used by make_bipartite.
  static BipGraph make(const std::vector<VertexId>& side_a, const std::vector<VertexId>& side_b,
                       const std::vector<IdEdge>& edges) {
    BipGraph g;
    std::unordered_map<VertexId, int> index;
    auto declare = [&](VertexId id, Side s) {
      if (!index.emplace(id, static_cast<int>(g.ids_.size())).second)
        throw Error(ErrorCode::DuplicateVertex, "vertex " + std::to_string(id) + " declared twice");
      g.ids_.push_back(id);
      g.sides_.push_back(s);
    };
    for (VertexId id : side_a) declare(id, Side::A);
    for (VertexId id : side_b) declare(id, Side::B);
    g.a_count_ = side_a.size();
    g.adj_.assign(g.ids_.size(), {});
    for (auto [u, v] : edges) {
      auto iu = index.find(u), iv = index.find(v);
      if (iu == index.end() || iv == index.end())
        throw Error(ErrorCode::UnknownVertex,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") references an undeclared vertex");
      if (g.sides_[iu->second] == g.sides_[iv->second])
        throw Error(ErrorCode::EdgeWithinSide,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins two vertices of one side");
      g.adj_[iu->second].push_back(iv->second);
      g.adj_[iv->second].push_back(iu->second);
    }
    g.normalize();
    return g;
  }

  // Trusted constructor from dense data; A-vertices must precede B-vertices.
  static BipGraph from_indices(std::vector<VertexId> ids, std::size_t a_count,
                               std::vector<std::vector<int>> adjacency) {
    BipGraph g;
    g.ids_ = std::move(ids);
    g.a_count_ = a_count;
    g.sides_.assign(g.ids_.size(), Side::B);
    std::fill(g.sides_.begin(), g.sides_.begin() + static_cast<long>(a_count), Side::A);
    g.adj_ = std::move(adjacency);
    g.normalize();
    return g;
  }

  std::size_t size() const { return ids_.size(); }
  std::size_t count(Side s) const { return s == Side::A ? a_count_ : ids_.size() - a_count_; }
  std::size_t edge_count() const { return edge_count_; }

  VertexId id(int v) const { return ids_[v]; }
  Side side(int v) const { return sides_[v]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

  std::optional<int> index_of(VertexId id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return static_cast<int>(it - ids_.begin());
  }

  std::vector<VertexId> side_ids(Side s) const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < size(); ++v)
      if (sides_[v] == s) out.push_back(ids_[v]);
    return out;
  }

  // Every edge once, as (A-id, B-id), ordered by A index then B index.
  std::vector<IdEdge> edges() const {
    std::vector<IdEdge> out;
    for (std::size_t u = 0; u < a_count_; ++u)
      for (int v : adj_[u]) out.emplace_back(ids_[u], ids_[v]);
    return out;
  }

  bool has_isolated() const {
    return std::any_of(adj_.begin(), adj_.end(), [](const auto& n) { return n.empty(); });
  }

  int min_degree() const {
    int d = size() ? degree(0) : 0;
    for (std::size_t v = 1; v < size(); ++v) d = std::min(d, degree(static_cast<int>(v)));
    return d;
  }

  bool is_regular() const {
    if (size() == 0) return false;
    for (std::size_t v = 1; v < size(); ++v)
      if (degree(static_cast<int>(v)) != degree(0)) return false;
    return true;
  }

  bool is_complete_bipartite() const {
    return a_count_ > 0 && a_count_ < size() && edge_count_ == a_count_ * (size() - a_count_);
  }

  bool is_forest() const;

  // Subgraph induced on `keep` (indices, any order); side order is preserved.
  BipGraph induced(std::vector<int> keep) const {
    std::sort(keep.begin(), keep.end());
    std::vector<int> remap(size(), -1);
    std::vector<VertexId> ids;
    std::size_t a = 0;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      remap[keep[k]] = static_cast<int>(k);
      ids.push_back(ids_[keep[k]]);
      if (sides_[keep[k]] == Side::A) ++a;
    }
    std::vector<std::vector<int>> adjacency(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k)
      for (int w : adj_[keep[k]])
        if (remap[w] >= 0) adjacency[k].push_back(remap[w]);
    return from_indices(std::move(ids), a, std::move(adjacency));
  }

  // Vertex index sets of the connected components, each sorted; components are
  // ordered by their smallest index.
  std::vector<std::vector<int>> component_indices(int skip = -1) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(size(), 0);
    if (skip >= 0) seen[skip] = 1;
    std::vector<int> stack;
    for (std::size_t s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> comp;
      seen[s] = 1;
      stack.push_back(static_cast<int>(s));
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w : adj_[v])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  friend bool operator==(const BipGraph& a, const BipGraph& b) {
    return a.ids_ == b.ids_ && a.a_count_ == b.a_count_ && a.adj_ == b.adj_;
  }

 private:
  void normalize() {
    edge_count_ = 0;
    for (auto& n : adj_) {
      std::sort(n.begin(), n.end());
      n.erase(std::unique(n.begin(), n.end()), n.end());
      edge_count_ += n.size();
    }
    edge_count_ /= 2;
  }

  std::vector<VertexId> ids_;
  std::vector<Side> sides_;
  std::vector<std::vector<int>> adj_;
  std::size_t a_count_ = 0;
  std::size_t edge_count_ = 0;
};

inline bool BipGraph::is_forest() const { return edge_count_ + component_indices().size() == size(); }

inline BipGraph make_bipartite(const std::vector<VertexId>& side_a, const std::vector<VertexId>& side_b,
                               const std::vector<IdEdge>& edges) {
  return BipGraph::make(side_a, side_b, edges);
}

inline BipGraph delete_vertex(const BipGraph& h, VertexId v) {
  auto idx = h.index_of(v);
  if (!idx) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in graph");
  std::vector<int> keep;
  for (std::size_t w = 0; w < h.size(); ++w)
    if (static_cast<int>(w) != *idx) keep.push_back(static_cast<int>(w));
  return h.induced(std::move(keep));
}

inline BipGraph swap_sides(const BipGraph& h) { return make_bipartite(h.side_ids(Side::B), h.side_ids(Side::A), h.edges()); }

inline std::vector<BipGraph> components(const BipGraph& h) {
  std::vector<BipGraph> out;
  for (auto& comp : h.component_indices()) out.push_back(h.induced(std::move(comp)));
  return out;
}

// Disjoint union; vertex ids of `second` must not collide with `first`.
inline BipGraph disjoint_union(const BipGraph& first, const BipGraph& second) {
  auto a = first.side_ids(Side::A), b = first.side_ids(Side::B);
  auto a2 = second.side_ids(Side::A), b2 = second.side_ids(Side::B);
  a.insert(a.end(), a2.begin(), a2.end());
  b.insert(b.end(), b2.begin(), b2.end());
  auto e = first.edges(), e2 = second.edges();
  e.insert(e.end(), e2.begin(), e2.end());
  return make_bipartite(a, b, e);
}

// K_{a,b}: A = 1..a, B = a+1..a+b.
inline BipGraph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgs, "negative side size");
  std::vector<VertexId> sa, sb;
  std::vector<IdEdge> edges;
  for (int i = 1; i <= a; ++i) sa.push_back(i);
  for (int j = 1; j <= b; ++j) sb.push_back(a + j);
  for (auto u : sa)
    for (auto v : sb) edges.emplace_back(u, v);
  return make_bipartite(sa, sb, edges);
}

struct HabcSpec {
  int a = 1;
  int b = 1;
  int c = 0;

  void validate() const {
    if (a < 1 || b < 1 || c < 0 || c > b)
      throw Error(ErrorCode::InvalidSpec, "H(a,b,c) needs a,b >= 1 and 0 <= c <= b; got (" + std::to_string(a) +
                                              "," + std::to_string(b) + "," + std::to_string(c) + ")");
  }
};

// K_{a,b} with c pendant vertices hung on c distinct B-vertices. The pendants
// join side A, so the sides have a+c and b vertices. Ids: K-part A = 1..a,
// B = a+1..a+b, pendant k (k = 1..c) is a+b+k attached to B-vertex a+k.
inline BipGraph make_habc(const HabcSpec& spec) {
  spec.validate();
  std::vector<VertexId> sa, sb;
  std::vector<IdEdge> edges;
  for (int i = 1; i <= spec.a; ++i) sa.push_back(i);
  for (int j = 1; j <= spec.b; ++j) sb.push_back(spec.a + j);
  for (int i = 1; i <= spec.a; ++i)
    for (int j = 1; j <= spec.b; ++j) edges.emplace_back(i, spec.a + j);
  for (int k = 1; k <= spec.c; ++k) {
    sa.push_back(spec.a + spec.b + k);
    edges.emplace_back(spec.a + spec.b + k, spec.a + k);
  }
  return make_bipartite(sa, sb, edges);
}

// Path on n vertices 1..n with vertex 1 in side A.
inline BipGraph path_graph(int n) {
  std::vector<VertexId> sa, sb;
  std::vector<IdEdge> edges;
  for (int v = 1; v <= n; ++v) (v % 2 ? sa : sb).push_back(v);
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return make_bipartite(sa, sb, edges);
}

// Even cycle on n vertices 1..n, odd ids in side A.
inline BipGraph cycle_graph(int n) {
  if (n < 4 || n % 2) throw Error(ErrorCode::InvalidArgs, "bipartite cycle needs even n >= 4");
  auto g = path_graph(n);
  auto edges = g.edges();
  edges.emplace_back(1, n);
  return make_bipartite(g.side_ids(Side::A), g.side_ids(Side::B), edges);
}

}  // namespace ptutte
