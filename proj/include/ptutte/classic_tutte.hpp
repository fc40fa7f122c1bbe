#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ptutte/bipoly.hpp"
#include "ptutte/error.hpp"
#include "ptutte/multigraph.hpp"
#include "ptutte/perm_tutte.hpp"
#include "ptutte/rational.hpp"

namespace ptutte {

inline constexpr int kDefaultSubsetLimit = 20;

namespace detail {
// (x-1)^r (y-1)^s expanded.
inline BiPoly shifted_monomial(int r, int s) {
  BiPoly out;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= s; ++j) {
      Integer c = binomial(r, i) * binomial(s, j);
      if ((r - i + s - j) % 2) c = -c;
      out.add_term({i, j}, Rational(c));
    }
  return out;
}
}  // namespace detail

// Rank-nullity expansion over all 2^m edge subsets.
inline BiPoly tutte_subset_oracle(const MultiGraph& g, int limit = kDefaultSubsetLimit) {
  const int m = g.edge_count(), n = g.vertex_count();
  if (m > limit || m > 30)
    throw Error(ErrorCode::TooLarge, std::to_string(m) + " edges exceeds the subset-expansion limit of " +
                                         std::to_string(std::min(limit, 30)));
  const int k_all = g.component_count();
  std::vector<std::vector<std::uint64_t>> count(static_cast<std::size_t>(n + 1),
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(m + 1), 0));
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    detail::DisjointSets dsu(n + 1);
    int k = n, size = 0;
    for (int e = 0; e < m; ++e)
      if (subset >> e & 1u) {
        ++size;
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        if (dsu.unite(u, v)) --k;
      }
    ++count[static_cast<std::size_t>(k - k_all)][static_cast<std::size_t>(k + size - n)];
  }
  BiPoly out;
  for (int r = 0; r <= n; ++r)
    for (int s = 0; s <= m; ++s)
      if (auto c = count[r][s]) out += detail::shifted_monomial(r, s) * Rational(Integer(static_cast<unsigned long>(c)));
  return out;
}

// Deletion-contraction on the first edge: a loop gives y*T(G-e), a bridge
// x*T(G/e), anything else T(G-e) + T(G/e).
inline BiPoly tutte_del_con(const MultiGraph& g) {
  if (g.edge_count() == 0) return BiPoly(Rational(1));
  if (g.is_loop(1)) return BiPoly::y() * tutte_del_con(delete_edge(g, 1));
  auto deleted = delete_edge(g, 1);
  if (deleted.component_count() > g.component_count()) return BiPoly::x() * tutte_del_con(contract_edge(g, 1));
  return tutte_del_con(deleted) + tutte_del_con(contract_edge(g, 1));
}

// labeling[e-1] is the label (1..m) given to edge e.
using EdgeLabeling = std::vector<int>;

inline EdgeLabeling identity_labeling(const MultiGraph& g) {
  EdgeLabeling l(static_cast<std::size_t>(g.edge_count()));
  std::iota(l.begin(), l.end(), 1);
  return l;
}

// Sum over spanning trees of x^ia(T) y^ea(T): a tree edge is internally active
// when it carries the largest label of its fundamental cut, a non-tree edge
// externally active when it carries the largest label of its fundamental cycle.
inline BiPoly activities_poly(const MultiGraph& g, const EdgeLabeling& labeling) {
  require_connected(g);
  auto sorted = labeling;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(labeling.size()) != g.edge_count() || sorted != identity_labeling(g))
    throw Error(ErrorCode::InvalidArgs, "labeling must be a permutation of 1.." + std::to_string(g.edge_count()));
  BiPoly out;
  for (auto& tree : spanning_trees(g)) {
    auto h = local_basis_exchange(g, tree);
    std::vector<int> order(h.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int u, int v) {
      return labeling[static_cast<std::size_t>(h.id(u) - 1)] < labeling[static_cast<std::size_t>(h.id(v) - 1)];
    });
    auto [ia, ea] = activities(h, order);
    out.add_term({ia, ea}, Rational(1));
  }
  return out;
}

struct DecomposeTerm {
  EdgeLabels tree;
  BiPoly summand;
};

inline std::vector<DecomposeTerm> decompose_terms(const MultiGraph& g, Engine& engine = default_engine()) {
  require_connected(g);
  std::vector<DecomposeTerm> out;
  for (auto& tree : spanning_trees(g)) out.push_back({tree, engine.poly(local_basis_exchange(g, tree))});
  return out;
}

// (T_G by deletion-contraction, sum over spanning trees of the permutation
// Tutte polynomial of H[T]).
inline std::pair<BiPoly, BiPoly> decompose_check(const MultiGraph& g, Engine& engine = default_engine()) {
  BiPoly sum;
  for (auto& t : decompose_terms(g, engine)) sum += t.summand;
  return {tutte_del_con(g), std::move(sum)};
}

struct TransferTreeCheck {
  EdgeLabels tree;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct TransferReport {
  std::array<EvalPoint, 3> points;
  Rational tutte_lhs;
  Rational tutte_rhs;
  bool tutte_holds = false;
  std::vector<TransferTreeCheck> trees;
  bool all_trees_hold = true;
};

// Quadratic inequality f(p1) f(p2) >= f(p0)^2, where pts = (p1, p2, p0),
// evaluated for T_G and for every H[T].
inline TransferReport transfer_check(const MultiGraph& g, const std::array<EvalPoint, 3>& pts,
                                     Engine& engine = default_engine()) {
  for (auto& p : pts)
    if (p.x < 0 || p.y < 0) throw Error(ErrorCode::InvalidArgs, "transfer check needs nonnegative coordinates");
  require_connected(g);
  TransferReport report;
  report.points = pts;
  auto t = tutte_del_con(g);
  report.tutte_lhs = t.eval(pts[0].x, pts[0].y) * t.eval(pts[1].x, pts[1].y);
  Rational base = t.eval(pts[2].x, pts[2].y);
  report.tutte_rhs = base * base;
  report.tutte_holds = report.tutte_lhs >= report.tutte_rhs;
  for (auto& tree : spanning_trees(g)) {
    auto h = local_basis_exchange(g, tree);
    TransferTreeCheck c{tree, engine.evaluate(h, pts[0]) * engine.evaluate(h, pts[1]), 0, false};
    Rational b = engine.evaluate(h, pts[2]);
    c.rhs = b * b;
    c.holds = c.lhs >= c.rhs;
    report.all_trees_hold = report.all_trees_hold && c.holds;
    report.trees.push_back(std::move(c));
  }
  return report;
}

}  // namespace ptutte
