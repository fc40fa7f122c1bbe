#pragma once

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ptutte/bip_graph.hpp"
#include "ptutte/canonical.hpp"
#include "ptutte/error.hpp"
#include "ptutte/perm_tutte.hpp"
#include "ptutte/rational.hpp"

namespace ptutte {

// Level sequences of free trees in constant amortized time (Wright, Richmond,
// Odlyzko, McKay), each tree once. A level sequence lists the depth of every
// vertex in preorder of a rooted tree.
class FreeTreeGenerator {
 public:
  using Layout = std::vector<int>;

  explicit FreeTreeGenerator(int order) {
    if (order < 2) throw Error(ErrorCode::InvalidArgs, "free trees need at least 2 vertices");
    Layout start;
    for (int i = 0; i <= order / 2; ++i) start.push_back(i);
    for (int i = 1; i < (order + 1) / 2; ++i) start.push_back(i);
    pending_ = next_tree(std::move(start));
  }

  // Next layout, or nullopt when exhausted.
  std::optional<Layout> next() {
    if (!pending_) return std::nullopt;
    Layout out = *pending_;
    auto rooted = next_rooted_tree(out);
    pending_ = rooted ? next_tree(std::move(*rooted)) : std::nullopt;
    return out;
  }

  // Tree with vertex ids 1..m in layout order; even levels form side A.
  static BipGraph to_graph(const Layout& layout) {
    std::vector<VertexId> side_a, side_b;
    std::vector<IdEdge> edges;
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
      (layout[i] % 2 == 0 ? side_a : side_b).push_back(i + 1);
      if (!stack.empty()) {
        while (layout[stack.back()] >= layout[i]) stack.pop_back();
        edges.emplace_back(stack.back() + 1, i + 1);
      }
      stack.push_back(i);
    }
    return make_bipartite(side_a, side_b, edges);
  }

 private:
  static std::optional<Layout> next_rooted_tree(const Layout& pred, int p = -1) {
    if (p < 0) {
      p = static_cast<int>(pred.size()) - 1;
      while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout result = pred;
    for (int i = p; i < static_cast<int>(result.size()); ++i) result[i] = result[i - p + q];
    return result;
  }

  static std::pair<Layout, Layout> split_tree(const Layout& layout) {
    int m = static_cast<int>(layout.size());
    bool one_found = false;
    for (int i = 0; i < static_cast<int>(layout.size()); ++i)
      if (layout[i] == 1) {
        if (one_found) {
          m = i;
          break;
        }
        one_found = true;
      }
    Layout left, rest{0};
    for (int i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (int i = m; i < static_cast<int>(layout.size()); ++i) rest.push_back(layout[i]);
    return {std::move(left), std::move(rest)};
  }

  static std::optional<Layout> next_tree(Layout candidate) {
    auto [left, rest] = split_tree(candidate);
    int left_height = *std::max_element(left.begin(), left.end());
    int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) valid = false;
      else if (left.size() == rest.size() && left > rest) valid = false;
    }
    if (valid) return candidate;
    int p = static_cast<int>(left.size());
    auto next = next_rooted_tree(candidate, p);
    if (!next) return std::nullopt;
    if (candidate[p] > 2) {
      auto [new_left, new_rest] = split_tree(*next);
      int h = *std::max_element(new_left.begin(), new_left.end());
      int len = h + 1;
      for (int k = 0; k < len; ++k) (*next)[next->size() - len + k] = k + 1;
    }
    return next;
  }

  std::optional<Layout> pending_;
};

inline std::vector<BipGraph> gen_free_trees(int m) {
  FreeTreeGenerator gen(m);
  std::vector<BipGraph> out;
  while (auto layout = gen.next()) out.push_back(FreeTreeGenerator::to_graph(*layout));
  return out;
}

inline Rational cmw_product(const BipGraph& h, const Rational& x, Engine& engine = default_engine()) {
  return engine.evaluate(h, {x, Rational(0)}) * engine.evaluate(h, {Rational(0), x});
}

struct SurveyRow {
  int m = 0;
  long tree_count = 0;
  Rational pi_min;
  std::string pi_min_4dp;
  std::string pi_min_4dp_truncated;
  CanonicalCode argmin_code;

  // Tab-separated: m, tree count, exact minimum, 4-decimal minimum, code.
  std::string tsv() const {
    return std::to_string(m) + "\t" + std::to_string(tree_count) + "\t" + to_string(pi_min) + "\t" + pi_min_4dp +
           "\t" + argmin_code.bytes;
  }

  // True if the 4-decimal figure agrees with either rendering.
  bool matches_decimal(const std::string& figure) const {
    auto strip = [](std::string s) {
      if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
      }
      return s;
    };
    return strip(figure) == strip(pi_min_4dp) || strip(figure) == strip(pi_min_4dp_truncated);
  }
};

// Minimum of P_2 over all free trees on m vertices. Workers pull trees from a
// shared queue and share the engine's memo.
inline SurveyRow survey(int m, unsigned jobs = 1, Engine& engine = default_engine()) {
  FreeTreeGenerator gen(m);
  std::vector<FreeTreeGenerator::Layout> layouts;
  while (auto l = gen.next()) layouts.push_back(std::move(*l));
  const Rational two(2);
  std::vector<Rational> values(layouts.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t k; (k = cursor.fetch_add(1)) < layouts.size();)
      values[k] = cmw_product(FreeTreeGenerator::to_graph(layouts[k]), two, engine);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] < values[best]) best = k;
  SurveyRow row;
  row.m = m;
  row.tree_count = static_cast<long>(layouts.size());
  row.pi_min = values[best];
  row.pi_min_4dp = to_decimal(row.pi_min, 4, Rounding::HalfAwayFromZero);
  row.pi_min_4dp_truncated = to_decimal(row.pi_min, 4, Rounding::Truncate);
  row.argmin_code = canonical_code(FreeTreeGenerator::to_graph(layouts[best]));
  return row;
}

namespace detail {
inline BipGraph edge_subgraph(const BipGraph& t, const std::vector<std::pair<int, int>>& edges) {
  std::vector<char> used(t.size(), 0);
  std::vector<IdEdge> ids;
  for (auto [u, v] : edges) {
    used[u] = used[v] = 1;
    ids.emplace_back(t.id(u), t.id(v));
  }
  std::vector<VertexId> a, b;
  for (int v = 0; v < static_cast<int>(t.size()); ++v)
    if (used[v]) (t.side(v) == Side::A ? a : b).push_back(t.id(v));
  return make_bipartite(a, b, ids);
}

// Edges of the branch hanging from `root` through `first`.
inline std::vector<std::pair<int, int>> branch_edges(const BipGraph& t, int root, int first) {
  std::vector<std::pair<int, int>> out{{root, first}};
  std::vector<std::pair<int, int>> stack{{first, root}};
  while (!stack.empty()) {
    auto [v, from] = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(v))
      if (w != from) {
        out.emplace_back(v, w);
        stack.emplace_back(w, v);
      }
  }
  return out;
}
}  // namespace detail

// Splits a tree with M >= 2 edges into two edge-disjoint subtrees sharing one
// vertex, each with at least M/3 edges. A path is cut in the middle. Otherwise
// start at a vertex of degree >= 3; if some prefix of its branches (sorted by
// size) holds between M/3 and 2M/3 edges, cut there, else step into the
// largest branch and repeat.
inline std::pair<BipGraph, BipGraph> tree_decompose(const BipGraph& t) {
  const long M = static_cast<long>(t.edge_count());
  if (M < 2) throw Error(ErrorCode::TooSmall, "tree decomposition needs at least 2 edges");
  if (!t.is_forest() || t.component_indices().size() != 1) throw Error(ErrorCode::InvalidArgs, "input is not a tree");
  const int n = static_cast<int>(t.size());
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (t.degree(v) >= 3) start = v;
  if (start < 0) {
    int end = 0;
    while (t.degree(end) != 1) ++end;
    std::vector<int> path{end};
    while (static_cast<long>(path.size()) <= M)
      for (int w : t.neighbors(path.back()))
        if (path.size() < 2 || w != path[path.size() - 2]) {
          path.push_back(w);
          break;
        }
    std::vector<std::pair<int, int>> first, second;
    for (long k = 0; k < M; ++k) (k < M / 2 ? first : second).emplace_back(path[k], path[k + 1]);
    return {detail::edge_subgraph(t, first), detail::edge_subgraph(t, second)};
  }
  for (int v = start;;) {
    std::vector<std::vector<std::pair<int, int>>> branches;
    for (int w : t.neighbors(v)) branches.push_back(detail::branch_edges(t, v, w));
    std::stable_sort(branches.begin(), branches.end(), [](const auto& l, const auto& r) { return l.size() < r.size(); });
    long sum = 0;
    for (std::size_t i = 0; i + 1 < branches.size(); ++i) {
      sum += static_cast<long>(branches[i].size());
      if (3 * sum >= M && 3 * sum <= 2 * M) {
        std::vector<std::pair<int, int>> first, second;
        for (std::size_t j = 0; j < branches.size(); ++j)
          for (auto e : branches[j]) (j <= i ? first : second).push_back(e);
        return {detail::edge_subgraph(t, first), detail::edge_subgraph(t, second)};
      }
    }
    v = branches.back().front().second;
  }
}

}  // namespace ptutte
