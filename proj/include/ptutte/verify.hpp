#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptutte/bip_graph.hpp"
#include "ptutte/classic_tutte.hpp"
#include "ptutte/error.hpp"
#include "ptutte/multigraph.hpp"
#include "ptutte/perm_tutte.hpp"
#include "ptutte/rational.hpp"
#include "ptutte/tree_survey.hpp"

namespace ptutte {

enum class CheckStatus {
  Proven,         // a theorem guarantees the comparison
  Open,           // no theorem covers this instance; a failure is a finding, not a bug
  NotApplicable,  // hypotheses of the check are not met
};

constexpr const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Proven: return "proven";
    case CheckStatus::Open: return "open";
    case CheckStatus::NotApplicable: return "not applicable";
  }
  return "unknown";
}

struct CheckReport {
  std::string check_name;
  std::string instance;
  Rational lhs;
  Rational rhs;
  std::string relation = ">=";
  bool holds = true;
  Rational margin;
  CheckStatus status = CheckStatus::Proven;

  // A report that should fail a verification run.
  bool is_violation() const { return status == CheckStatus::Proven && !holds; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["check"] = check_name;
    j["instance"] = instance;
    j["status"] = to_string(status);
    if (status != CheckStatus::NotApplicable) {
      j["lhs"] = to_string(lhs);
      j["relation"] = relation;
      j["rhs"] = to_string(rhs);
      j["holds"] = holds;
      j["margin"] = to_string(margin);
    }
    return j;
  }
};

inline CheckReport compare(std::string name, std::string instance, const Rational& lhs, std::string relation,
                           const Rational& rhs, CheckStatus status = CheckStatus::Proven) {
  CheckReport r{std::move(name), std::move(instance), lhs, rhs, std::move(relation), false, lhs - rhs, status};
  if (r.relation == ">=") r.holds = lhs >= rhs;
  else if (r.relation == ">") r.holds = lhs > rhs;
  else if (r.relation == "<=") r.holds = lhs <= rhs;
  else if (r.relation == "<") r.holds = lhs < rhs;
  else if (r.relation == "==") r.holds = lhs == rhs;
  else throw Error(ErrorCode::InvalidArgs, "unknown relation " + r.relation);
  return r;
}

inline CheckReport not_applicable(std::string name, std::string instance) {
  CheckReport r;
  r.check_name = std::move(name);
  r.instance = std::move(instance);
  r.status = CheckStatus::NotApplicable;
  return r;
}

// "A=[..] B=[..] E=[[a,b],..]" with ids as given.
inline std::string describe(const BipGraph& h) {
  auto list = [](const std::vector<VertexId>& ids) {
    std::string s = "[";
    for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + std::to_string(ids[k]);
    return s + "]";
  };
  std::string s = "A=" + list(h.side_ids(Side::A)) + " B=" + list(h.side_ids(Side::B)) + " E=[";
  bool first = true;
  for (auto [u, v] : h.edges()) {
    s += (first ? "[" : ",[") + std::to_string(u) + "," + std::to_string(v) + "]";
    first = false;
  }
  return s + "]";
}

inline std::string describe(const MultiGraph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " E=[";
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    s += (k ? ",[" : "[") + std::to_string(g.edges()[k].first) + "," + std::to_string(g.edges()[k].second) + "]";
  return s + "]";
}

namespace detail {
inline Rational alternating_binomial_sum(const BiPoly& p, long h) {
  Rational sum(0);
  for (const auto& [mono, c] : p.terms()) {
    if (mono.x + mono.y > h) continue;
    Rational term = c * Rational(binomial(h - mono.x, mono.y));
    if (mono.y % 2) sum -= term;
    else sum += term;
  }
  return sum;
}
}  // namespace detail

// sum_{i+j<=h} C(h-i, j) (-1)^j t_{i,j}
inline Rational brylawski_sum(const BipGraph& h, long order, Engine& engine = default_engine()) {
  if (order < 0) throw Error(ErrorCode::InvalidArgs, "h must be nonnegative");
  return detail::alternating_binomial_sum(engine.poly(h), order);
}

// 0 below the vertex count m, and (-1)^b alt(H) C(b+k, k) at h = m + k.
inline Rational brylawski_closed_form(const BipGraph& h, long order, Engine& engine = default_engine()) {
  const long m = static_cast<long>(h.size()), b = static_cast<long>(h.count(Side::B));
  if (order < m) return Rational(0);
  Rational v = engine.alt(h) * Rational(binomial(b + order - m, order - m));
  return b % 2 ? Rational(-v) : v;
}

inline Rational brylawski_graph_sum(const MultiGraph& g, long order) {
  require_connected(g);
  if (order < 0) throw Error(ErrorCode::InvalidArgs, "h must be nonnegative");
  return detail::alternating_binomial_sum(tutte_del_con(g), order);
}

// 0 below the edge count m, and (-1)^{m-r} C(h-r, h-m) with r = n-1 above.
inline Rational brylawski_graph_closed_form(const MultiGraph& g, long order) {
  require_connected(g);
  const long m = g.edge_count(), r = g.vertex_count() - 1;
  if (order < m) return Rational(0);
  Rational v(binomial(order - r, order - m));
  return (m - r) % 2 ? Rational(-v) : v;
}

// Prod over A of (1 + (x-1)/(d+1)) times prod over B of (1 + (y-1)/(d+1)).
inline Rational degree_product_bound(const BipGraph& h, const EvalPoint& pt) {
  Rational out(1);
  for (int v = 0; v < static_cast<int>(h.size()); ++v) {
    const Rational& t = h.side(v) == Side::A ? pt.x : pt.y;
    out *= 1 + (t - 1) / (h.degree(v) + 1);
  }
  return out;
}

inline const std::vector<EvalPoint>& mixed_quadrant_points() {
  static const std::vector<EvalPoint> pts{
      {0, 2}, {Rational(1, 2), 3}, {Rational(1, 3), Rational(3, 2)}, {1, 4},
      {2, 0}, {3, Rational(1, 2)}, {Rational(3, 2), Rational(1, 3)}, {4, 1},
  };
  return pts;
}

inline const std::vector<EvalPoint>& same_quadrant_points() {
  static const std::vector<EvalPoint> pts{
      {2, 2}, {3, Rational(3, 2)}, {Rational(5, 4), 4},
      {0, 0}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(3, 4)},
  };
  return pts;
}

inline std::string point_name(const EvalPoint& p) { return "(" + p.key() + ")"; }

// Every inequality of the suite on one graph. Checks whose hypotheses fail are
// reported as not applicable.
inline std::vector<CheckReport> check_inequality_suite(const BipGraph& h, Engine& engine = default_engine()) {
  std::vector<CheckReport> out;
  const std::string id = describe(h);
  const bool isolated = h.has_isolated() || h.size() == 0;
  auto ev = [&](const Rational& x, const Rational& y) { return engine.evaluate(h, {x, y}); };
  auto product = [&](const Rational& x) -> Rational { return ev(x, 0) * ev(0, x); };

  if (isolated) {
    out.push_back(not_applicable("quadratic_4_0_2_2", id));
    out.push_back(not_applicable("min_degree_product", id));
    out.push_back(not_applicable("product_x3", id));
    out.push_back(not_applicable("product_x29243", id));
  } else {
    Rational t22 = ev(2, 2);
    out.push_back(compare("quadratic_4_0_2_2", id, ev(4, 0) * ev(0, 4), ">=", t22 * t22));
    const int delta = h.min_degree();
    Rational xd = 2 + Rational(1, delta);
    out.push_back(compare("min_degree_product", id + " x=" + to_string(xd), product(xd), ">=", Rational(1)));
    out.push_back(compare("product_x3", id, product(3), ">=", Rational(1)));
    out.push_back(compare("product_x29243", id, product(Rational(29243, 10000)), ">", Rational(1)));
  }

  // x = 2 holds for trees, regular graphs and complete bipartite graphs; it is
  // false in general.
  if (isolated) {
    out.push_back(not_applicable("product_x2", id));
  } else {
    bool known = h.is_forest() || h.is_regular() || h.is_complete_bipartite();
    out.push_back(compare("product_x2", id, product(2), ">=", Rational(1), known ? CheckStatus::Proven : CheckStatus::Open));
  }

  const Rational one(1);
  for (const auto& p : mixed_quadrant_points()) {
    Rational value = ev(p.x, p.y);
    out.push_back(compare("rectangle_mixed", id + " at " + point_name(p), value * ev(1, 1), ">=", ev(p.x, one) * ev(one, p.y)));
    out.push_back(compare("degree_product_bound", id + " at " + point_name(p), value, ">=", degree_product_bound(h, p)));
  }
  for (const auto& p : same_quadrant_points())
    out.push_back(compare("rectangle_same", id + " at " + point_name(p), ev(p.x, p.y) * ev(1, 1), "<=",
                          ev(p.x, one) * ev(one, p.y)));

  if (h.is_regular() && !isolated) {
    for (Rational x : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)})
      out.push_back(compare("regular_line", id + " x=" + to_string(x), ev(x, 2 - x), ">=", one));
  } else {
    out.push_back(not_applicable("regular_line", id));
  }

  const int a = static_cast<int>(h.count(Side::A)), b = static_cast<int>(h.count(Side::B));
  if (a > 0 && b > 0) {
    BiPoly k = complete_bipartite_poly(a, b);
    for (const EvalPoint& p : {EvalPoint{2, 3}, EvalPoint{3, Rational(3, 2)}, EvalPoint{1, 1}})
      out.push_back(compare("complete_bipartite_comparison", id + " at " + point_name(p), ev(p.x, p.y), ">=", k.eval(p.x, p.y)));
  } else {
    out.push_back(not_applicable("complete_bipartite_comparison", id));
  }
  return out;
}

// Identities: normalization, side swap, extreme-coefficient symmetry,
// alternating number, parabola collapse, and the coefficient support rule.
inline std::vector<CheckReport> check_identity_suite(const BipGraph& h, const std::vector<Rational>& parabola_xs,
                                                     Engine& engine = default_engine()) {
  std::vector<CheckReport> out;
  const std::string id = describe(h);
  const BiPoly p = engine.poly(h);
  const long m = static_cast<long>(h.size());
  const int a = static_cast<int>(h.count(Side::A)), b = static_cast<int>(h.count(Side::B));
  out.push_back(compare("normalization", id, p.coefficient_sum(), "==", Rational(1)));
  bool nonnegative = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
  out.push_back(compare("nonnegative_coefficients", id, Rational(nonnegative ? 1 : 0), "==", Rational(1)));
  BiPoly swapped = engine.poly(swap_sides(h));
  out.push_back(compare("side_swap", id, Rational(swapped == p.swapped() ? 1 : 0), "==", Rational(1)));

  int r = 0, l = 0;
  for (int v = 0; v < static_cast<int>(h.size()); ++v)
    if (h.degree(v) == 0) ++(h.side(v) == Side::A ? r : l);
  Rational alt_h = engine.alt(h);
  out.push_back(compare("alt_coefficient_a", id, p.coeff(a, l), "==", alt_h));
  out.push_back(compare("alt_coefficient_b", id, p.coeff(r, b), "==", alt_h));
  if (!h.has_isolated() && h.size() > 0) out.push_back(compare("extreme_symmetry", id, p.coeff(a, 0), "==", p.coeff(0, b)));

  for (const Rational& x : parabola_xs) {
    if (x == 0 || x == 1) continue;
    Rational y = x / (x - 1);
    Rational rhs = alt_h * pow(x, static_cast<unsigned>(m));
    Rational den = pow(Rational(x - 1), static_cast<unsigned>(b));
    rhs /= den;
    out.push_back(compare("parabola", id + " x=" + to_string(x), engine.evaluate(h, {x, y}), "==", rhs));
  }
  out.push_back(compare("parabola", id + " x=2", engine.evaluate(h, {2, 2}), "==", alt_h * pow(Rational(2), static_cast<unsigned>(m))));

  if (h.component_indices().size() == 1) {
    bool support = true;
    for (const auto& [mono, c] : p.terms())
      for (int i = 0; i <= mono.x && support; ++i)
        for (int j = 0; j <= mono.y && support; ++j)
          if ((i || j) && p.coeff(i, j) == 0) support = false;
    out.push_back(compare("coefficient_support", id, Rational(support ? 1 : 0), "==", Rational(1)));
  }
  return out;
}

inline std::vector<CheckReport> check_brylawski(const BipGraph& h, int extra = 3, Engine& engine = default_engine()) {
  std::vector<CheckReport> out;
  const std::string id = describe(h);
  const long m = static_cast<long>(h.size());
  for (long order = 0; order <= m + extra; ++order)
    out.push_back(compare("brylawski", id + " h=" + std::to_string(order), brylawski_sum(h, order, engine), "==",
                          brylawski_closed_form(h, order, engine)));
  return out;
}

inline std::vector<CheckReport> check_brylawski_graph(const MultiGraph& g, int extra = 3) {
  std::vector<CheckReport> out;
  const std::string id = describe(g);
  for (long order = 0; order <= g.edge_count() + extra; ++order)
    out.push_back(compare("brylawski_graph", id + " h=" + std::to_string(order), brylawski_graph_sum(g, order), "==",
                          brylawski_graph_closed_form(g, order)));
  return out;
}

// Identifies root1 of t1 with root2 of t2; t2's other vertices get fresh ids
// above every id of t1.
inline BipGraph glue(const BipGraph& t1, VertexId root1, const BipGraph& t2, VertexId root2) {
  auto i1 = t1.index_of(root1), i2 = t2.index_of(root2);
  if (!i1) throw Error(ErrorCode::UnknownVertex, "root " + std::to_string(root1) + " not in first tree");
  if (!i2) throw Error(ErrorCode::UnknownVertex, "root " + std::to_string(root2) + " not in second tree");
  if (t1.side(*i1) != t2.side(*i2)) throw Error(ErrorCode::IncompatibleSides, "roots lie on different sides");
  VertexId next = 0;
  for (std::size_t v = 0; v < t1.size(); ++v) next = std::max(next, t1.id(static_cast<int>(v)));
  std::vector<VertexId> fresh(t2.size());
  for (std::size_t v = 0; v < t2.size(); ++v) fresh[v] = static_cast<int>(v) == *i2 ? root1 : ++next;
  auto a = t1.side_ids(Side::A), b = t1.side_ids(Side::B);
  auto edges = t1.edges();
  for (int v = 0; v < static_cast<int>(t2.size()); ++v) {
    if (v != *i2) (t2.side(v) == Side::A ? a : b).push_back(fresh[v]);
    if (t2.side(v) == Side::A)
      for (int w : t2.neighbors(v)) edges.emplace_back(fresh[v], fresh[w]);
  }
  return make_bipartite(a, b, edges);
}

// Gluing inequalities at (x, 0) with x >= 1: x^[root in A] T_H >= T_H1 T_H2,
// and P_x(H) >= P_x(H1) P_x(H2) / x.
inline std::pair<CheckReport, CheckReport> check_gluing(const BipGraph& t1, VertexId root1, const BipGraph& t2,
                                                        VertexId root2, const Rational& x, Engine& engine = default_engine()) {
  if (x < 1) throw Error(ErrorCode::InvalidArgs, "gluing inequality needs x >= 1");
  for (const auto* t : {&t1, &t2})
    if (!t->is_forest() || t->component_indices().size() != 1) throw Error(ErrorCode::InvalidArgs, "gluing needs trees");
  BipGraph h = glue(t1, root1, t2, root2);
  const bool root_in_a = t1.side(*t1.index_of(root1)) == Side::A;
  const EvalPoint px{x, 0}, py{0, x};
  const std::string id = describe(t1) + " root " + std::to_string(root1) + " + " + describe(t2) + " root " +
                         std::to_string(root2) + " x=" + to_string(x);
  Rational lhs = engine.evaluate(h, px);
  if (root_in_a) lhs *= x;
  auto side = compare(root_in_a ? "gluing_root_a" : "gluing_root_b", id, lhs, ">=",
                      engine.evaluate(t1, px) * engine.evaluate(t2, px));
  Rational p1 = engine.evaluate(t1, px) * engine.evaluate(t1, py);
  Rational p2 = engine.evaluate(t2, px) * engine.evaluate(t2, py);
  auto prod = compare("gluing_product", id, cmw_product(h, x, engine), ">=", p1 * p2 / x);
  return {std::move(side), std::move(prod)};
}

// T_H(x,0) >= ((x+1)/2) T_{H-v}(x,0) for a leaf v in A, factor 1/2 for v in B.
inline CheckReport check_leaf_deletion(const BipGraph& h, VertexId v, const Rational& x, Engine& engine = default_engine()) {
  auto idx = h.index_of(v);
  if (!idx) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in graph");
  if (h.degree(*idx) != 1) throw Error(ErrorCode::NotALeaf, "vertex " + std::to_string(v) + " has degree " + std::to_string(h.degree(*idx)));
  if (x < 1) throw Error(ErrorCode::InvalidArgs, "leaf deletion inequality needs x >= 1");
  const bool in_a = h.side(*idx) == Side::A;
  Rational factor = in_a ? Rational((x + 1) / 2) : Rational(1, 2);
  return compare(in_a ? "leaf_deletion_a" : "leaf_deletion_b", describe(h) + " v=" + std::to_string(v) + " x=" + to_string(x),
                 engine.evaluate(h, {x, 0}), ">=", factor * engine.evaluate(delete_vertex(h, v), {x, 0}));
}

// P_x(H(a,b,c)) over a grid of specs; returns the instances with P_x < 1,
// most negative margin first.
inline std::vector<CheckReport> counterexample_scan(std::pair<int, int> a_range, std::pair<int, int> b_range,
                                                    std::pair<int, int> c_range, const Rational& x) {
  auto [a_lo, a_hi] = a_range;
  auto [b_lo, b_hi] = b_range;
  auto [c_lo, c_hi] = c_range;
  if (a_lo < 1 || b_lo < 1 || c_lo < 0 || a_lo > a_hi || b_lo > b_hi || c_lo > c_hi)
    throw Error(ErrorCode::InvalidSpec, "empty or invalid H(a,b,c) ranges");
  HabcTable tx(a_hi, b_hi, c_hi, {x, 0}), ty(a_hi, b_hi, c_hi, {0, x});
  std::vector<CheckReport> out;
  for (int a = a_lo; a <= a_hi; ++a)
    for (int b = b_lo; b <= b_hi; ++b)
      for (int c = c_lo; c <= std::min(b, c_hi); ++c) {
        auto r = compare("habc_product", "H(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                             ") x=" + to_string(x),
                         tx.at(a, b, c) * ty.at(a, b, c), ">=", Rational(1), CheckStatus::Open);
        if (!r.holds) out.push_back(std::move(r));
      }
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.margin < r.margin; });
  return out;
}

}  // namespace ptutte
