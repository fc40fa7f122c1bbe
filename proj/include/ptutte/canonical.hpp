#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ptutte/bip_graph.hpp"
#include "ptutte/error.hpp"

namespace ptutte {

// Isomorphism-invariant byte string. Equal codes iff the graphs are
// isomorphic (respecting sides when the code was built side-sensitively).
struct CanonicalCode {
  std::string bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

// AHU encoding of a tree rooted at `root`; each vertex contributes its side
// letter followed by its sorted child encodings in parentheses.
inline std::string rooted_tree_code(const BipGraph& t, int root, bool flip) {
  const int n = static_cast<int>(t.size());
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int w : t.neighbors(order[k]))
      if (parent[w] < 0) {
        parent[w] = order[k];
        order.push_back(w);
      }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::size_t len = 3;
    for (auto& k : kids) len += k.size();
    std::string s;
    s.reserve(len);
    s += ((t.side(v) == Side::A) != flip) ? 'a' : 'b';
    s += '(';
    for (auto& k : kids) s += k;
    s += ')';
    if (v != root) child_codes[parent[v]].push_back(std::move(s));
    else code[v] = std::move(s);
    kids.clear();
    kids.shrink_to_fit();
  }
  return std::move(code[root]);
}

// Centroid(s) of a tree: one or two adjacent vertices.
inline std::vector<int> tree_centroids(const BipGraph& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> parent(n, -1), order, sub(n, 1);
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int w : t.neighbors(order[k]))
      if (parent[w] < 0) {
        parent[w] = order[k];
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != 0) sub[parent[*it]] += sub[*it];
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    int worst = n - sub[v];
    for (int w : t.neighbors(v))
      if (w != 0 && parent[w] == v) worst = std::max(worst, sub[w]);
    if (2 * worst <= n) out.push_back(v);
  }
  return out;
}

inline std::string tree_code(const BipGraph& t, bool flip) {
  std::string best;
  for (int c : tree_centroids(t)) {
    auto s = rooted_tree_code(t, c, flip);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

// Canonical form of a vertex-coloured simple graph with at most 64 vertices,
// by colour refinement plus individualization search over the whole search
// tree (twin vertices are explored once). Exact; no hashing.
class ColoredCanonizer {
 public:
  ColoredCanonizer(std::vector<int> colors, std::vector<std::uint64_t> adjacency)
      : n_(static_cast<int>(colors.size())), color_(std::move(colors)), adj_(std::move(adjacency)) {}

  std::string run() {
    std::vector<int> verts(n_);
    for (int v = 0; v < n_; ++v) verts[v] = v;
    std::stable_sort(verts.begin(), verts.end(), [&](int u, int v) {
      if (color_[u] != color_[v]) return color_[u] < color_[v];
      return std::popcount(adj_[u]) < std::popcount(adj_[v]);
    });
    Partition cells;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      int v = verts[k];
      if (k == 0 || color_[v] != color_[verts[k - 1]] ||
          std::popcount(adj_[v]) != std::popcount(adj_[verts[k - 1]]))
        cells.emplace_back();
      cells.back().push_back(v);
    }
    search(std::move(cells));
    return best_;
  }

 private:
  using Partition = std::vector<std::vector<int>>;

  void refine(Partition& cells) const {
    bool changed = true;
    std::vector<std::uint64_t> masks;
    while (changed) {
      changed = false;
      masks.assign(cells.size(), 0);
      for (std::size_t k = 0; k < cells.size(); ++k)
        for (int v : cells[k]) masks[k] |= std::uint64_t{1} << v;
      for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        auto& cell = cells[ci];
        if (cell.size() < 2) continue;
        std::vector<std::pair<std::vector<int>, int>> sig;
        sig.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> counts(cells.size());
          for (std::size_t k = 0; k < cells.size(); ++k) counts[k] = std::popcount(adj_[v] & masks[k]);
          sig.emplace_back(std::move(counts), v);
        }
        std::stable_sort(sig.begin(), sig.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        if (sig.front().first == sig.back().first) continue;
        Partition pieces;
        for (std::size_t k = 0; k < sig.size(); ++k) {
          if (k == 0 || sig[k].first != sig[k - 1].first) pieces.emplace_back();
          pieces.back().push_back(sig[k].second);
        }
        cells.erase(cells.begin() + static_cast<long>(ci));
        cells.insert(cells.begin() + static_cast<long>(ci), pieces.begin(), pieces.end());
        changed = true;
      }
    }
  }

  std::string leaf_code(const Partition& cells) const {
    std::vector<int> order;
    for (auto& c : cells) order.push_back(c.front());
    std::string s;
    s.reserve(static_cast<std::size_t>(2 * n_ + n_ * n_ / 8 + 4));
    s += static_cast<char>(n_);
    for (int v : order) {
      s += static_cast<char>(color_[v] >> 8);
      s += static_cast<char>(color_[v] & 0xff);
    }
    unsigned char acc = 0;
    int bits = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        acc = static_cast<unsigned char>((acc << 1) | ((adj_[order[i]] >> order[j]) & 1u));
        if (++bits == 8) {
          s += static_cast<char>(acc);
          acc = 0;
          bits = 0;
        }
      }
    if (bits) s += static_cast<char>(acc << (8 - bits));
    return s;
  }

  void search(Partition cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k].size() > 1 && (target == cells.size() || cells[k].size() < cells[target].size())) target = k;
    if (target == cells.size()) {
      auto code = leaf_code(cells);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    const auto& cell = cells[target];
    std::vector<int> reps;
    for (int v : cell) {
      bool twin = false;
      for (int r : reps) {
        std::uint64_t bv = std::uint64_t{1} << v, br = std::uint64_t{1} << r;
        if ((adj_[v] & ~br) == (adj_[r] & ~bv)) {
          twin = true;
          break;
        }
      }
      if (!twin) reps.push_back(v);
    }
    for (int v : reps) {
      Partition next;
      next.reserve(cells.size() + 1);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k != target) {
          next.push_back(cells[k]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int w : cells[k])
          if (w != v) rest.push_back(w);
        next.push_back(std::move(rest));
      }
      search(std::move(next));
    }
  }

  int n_;
  std::vector<int> color_;
  std::vector<std::uint64_t> adj_;
  std::string best_;
};

// Hanging trees are folded into vertex colours first: leaves are peeled
// repeatedly and each surviving vertex is coloured by its side letter plus the
// sorted AHU codes of the trees peeled into it. Only the 2-core (at most 64
// vertices) goes through the search; the palette is part of the code.
inline std::string general_code(const BipGraph& g, bool flip) {
  const int n = static_cast<int>(g.size());
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<std::vector<std::string>> hung(n);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  auto letter = [&](int v) { return ((g.side(v) == Side::A) != flip) ? 'a' : 'b'; };
  auto seal = [&](int v) {
    auto& kids = hung[v];
    std::sort(kids.begin(), kids.end());
    std::string s(1, letter(v));
    s += '(';
    for (auto& k : kids) s += k;
    s += ')';
    kids.clear();
    return s;
  };
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    int v = leaves[k];
    if (removed[v] || deg[v] != 1) continue;
    removed[v] = 1;
    int parent = -1;
    for (int w : g.neighbors(v))
      if (!removed[w]) parent = w;
    hung[parent].push_back(seal(v));
    if (--deg[parent] == 1) leaves.push_back(parent);
  }
  std::vector<int> core;
  std::vector<int> pos(n, -1);
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      pos[v] = static_cast<int>(core.size());
      core.push_back(v);
    }
  if (core.size() > 64)
    throw Error(ErrorCode::TooLarge, "canonical labelling supports cores of at most 64 vertices");
  std::vector<std::string> colour_of(core.size());
  for (std::size_t k = 0; k < core.size(); ++k) colour_of[k] = seal(core[k]);
  std::vector<std::string> palette = colour_of;
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::vector<int> colors(core.size());
  std::vector<std::uint64_t> adj(core.size(), 0);
  for (std::size_t k = 0; k < core.size(); ++k) {
    colors[k] = static_cast<int>(std::lower_bound(palette.begin(), palette.end(), colour_of[k]) - palette.begin());
    for (int w : g.neighbors(core[k]))
      if (pos[w] >= 0) adj[k] |= std::uint64_t{1} << pos[w];
  }
  std::string out;
  for (auto& c : palette) {
    out += c;
    out += '#';
  }
  out += ColoredCanonizer(std::move(colors), std::move(adj)).run();
  return out;
}

}  // namespace detail

// Code of a connected graph (single component); `flip` exchanges the sides.
inline std::string connected_code(const BipGraph& comp, bool flip = false) {
  if (comp.edge_count() + 1 == comp.size()) return "T" + detail::tree_code(comp, flip);
  return "G" + detail::general_code(comp, flip);
}

inline CanonicalCode canonical_code(const BipGraph& h, bool side_sensitive = true) {
  auto build = [&](bool flip) {
    std::vector<std::string> parts;
    for (auto& comp : components(h)) parts.push_back(connected_code(comp, flip));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& p : parts) {
      out += p;
      out += '|';
    }
    return out;
  };
  std::string code = build(false);
  if (!side_sensitive) code = std::min(code, build(true));
  return {std::move(code)};
}

// Canonical code of a simple graph without side structure (all vertices one
// colour). Adjacency lists are 0-based.
inline std::string simple_graph_code(const std::vector<std::vector<int>>& adjacency) {
  if (adjacency.size() > 64) throw Error(ErrorCode::TooLarge, "canonical labelling supports at most 64 vertices");
  std::vector<std::uint64_t> adj(adjacency.size(), 0);
  for (std::size_t v = 0; v < adjacency.size(); ++v)
    for (int w : adjacency[v]) adj[v] |= std::uint64_t{1} << w;
  return detail::ColoredCanonizer(std::vector<int>(adjacency.size(), 0), std::move(adj)).run();
}

}  // namespace ptutte
