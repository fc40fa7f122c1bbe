#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ptutte/bip_graph.hpp"
#include "ptutte/bipoly.hpp"
#include "ptutte/canonical.hpp"
#include "ptutte/error.hpp"
#include "ptutte/memo.hpp"
#include "ptutte/multigraph.hpp"
#include "ptutte/rational.hpp"

namespace ptutte {

struct EvalPoint {
  Rational x;
  Rational y;

  std::string key() const { return to_string(x) + "," + to_string(y); }
};

inline EvalPoint point(long x, long y) { return {Rational(x), Rational(y)}; }

// Number of internally active A-vertices and externally active B-vertices.
struct ActivityCount {
  int ia = 0;
  int ea = 0;
};

inline constexpr int kDefaultBruteForceLimit = 10;

// Activity counts of one ordering. `order` lists vertex indices by increasing
// permutation value; a vertex is active when all its neighbours come earlier.
inline ActivityCount activities(const BipGraph& h, const std::vector<int>& order) {
  std::vector<char> seen(h.size(), 0);
  ActivityCount count;
  for (int v : order) {
    bool active = std::all_of(h.neighbors(v).begin(), h.neighbors(v).end(), [&](int w) { return seen[w] != 0; });
    if (active) ++(h.side(v) == Side::A ? count.ia : count.ea);
    seen[v] = 1;
  }
  return count;
}

// The defining average over all m! orderings.
inline BiPoly brute_force_poly(const BipGraph& h, int limit = kDefaultBruteForceLimit) {
  const int m = static_cast<int>(h.size());
  if (m > limit || m > 20)
    throw Error(ErrorCode::TooLarge, std::to_string(m) + " vertices exceeds the brute-force limit of " +
                                         std::to_string(std::min(limit, 20)));
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(m), 0);
  for (int v = 0; v < m; ++v)
    for (int w : h.neighbors(v)) nbr[v] |= std::uint64_t{1} << w;
  const int a = static_cast<int>(h.count(Side::A));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>((a + 1) * (m - a + 1)), 0);
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t total = 0;
  do {
    std::uint64_t seen = 0;
    int ia = 0, ea = 0;
    for (int v : order) {
      if ((nbr[v] & ~seen) == 0) ++(v < a ? ia : ea);
      seen |= std::uint64_t{1} << v;
    }
    ++counts[static_cast<std::size_t>(ia * (m - a + 1) + ea)];
    ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  BiPoly out;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= m - a; ++j) {
      auto c = counts[static_cast<std::size_t>(i * (m - a + 1) + j)];
      if (c) out.add_term({i, j}, make_rational(Integer(static_cast<unsigned long>(c)), Integer(static_cast<unsigned long>(total))));
    }
  return out;
}

// Closed form for K_{a,b}: an active vertex on one side forbids any on the
// other, and the active count is the length of the longest same-side run at
// the top of the ordering.
inline BiPoly complete_bipartite_poly(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgs, "complete bipartite closed form needs a, b >= 1");
  const long m = a + b;
  BiPoly out;
  auto side_terms = [&](int own, int other, bool on_x) {
    Rational falling_own(1), falling_m(m);
    for (int i = 1; i <= own; ++i) {
      falling_own *= own - i + 1;
      falling_m *= m - i;
      Rational c = falling_own * other / falling_m;
      out.add_term(on_x ? Monomial{i, 0} : Monomial{0, i}, c);
    }
  };
  side_terms(a, b, true);
  side_terms(b, a, false);
  return out;
}

struct EngineOptions {
  std::size_t max_memo_entries = 10'000'000;
};

// Memoized evaluation of the permutation Tutte polynomial, its values at a
// fixed point, and the alternating number. Thread-safe; one engine may be
// shared by any number of workers.
class Engine {
 public:
  explicit Engine(EngineOptions options = {}) : options_(options) {}

  BiPoly poly(const BipGraph& h) { return value(h, PolyOps{}, poly_memo_); }

  Rational evaluate(const BipGraph& h, const EvalPoint& pt) { return value(h, EvalOps{pt, ":" + pt.key()}, eval_memo_); }

  Rational alt(const BipGraph& h) { return alt_value(h, -1); }

  std::size_t memo_entries() const { return poly_memo_.size() + eval_memo_.size() + alt_memo_.size(); }

 private:
  struct PolyOps {
    using Value = BiPoly;
    Value one() const { return BiPoly(Rational(1)); }
    Value zero() const { return {}; }
    Value isolated(Side s) const { return s == Side::A ? BiPoly::x() : BiPoly::y(); }
    Value complete(int a, int b) const { return complete_bipartite_poly(a, b); }
    bool is_zero(const Value& v) const { return v.is_zero(); }
    std::string suffix() const { return {}; }
  };

  struct EvalOps {
    using Value = Rational;
    EvalPoint pt;
    std::string tag;
    Value one() const { return Rational(1); }
    Value zero() const { return Rational(0); }
    Value isolated(Side s) const { return s == Side::A ? pt.x : pt.y; }
    Value complete(int a, int b) const { return complete_bipartite_poly(a, b).eval(pt.x, pt.y); }
    bool is_zero(const Value& v) const { return v == 0; }
    const std::string& suffix() const { return tag; }
  };

  template <class Ops, class Memo>
  typename Ops::Value value(const BipGraph& h, const Ops& ops, Memo& memo, int skip = -1) {
    auto acc = ops.one();
    auto comps = h.component_indices(skip);
    // Singletons first: they are free and may zero the product.
    for (auto& comp : comps)
      if (comp.size() == 1) {
        acc *= ops.isolated(h.side(comp.front()));
        if (ops.is_zero(acc)) return acc;
      }
    for (auto& comp : comps)
      if (comp.size() > 1) {
        auto v = connected_value(h.induced(std::move(comp)), ops, memo);
        acc *= v;
        if (ops.is_zero(acc)) return acc;
      }
    return acc;
  }

  // Connected, at least two vertices, hence no isolated vertex: the
  // vertex-deletion average applies.
  template <class Ops, class Memo>
  typename Ops::Value connected_value(const BipGraph& c, const Ops& ops, Memo& memo) {
    if (c.is_complete_bipartite())
      return ops.complete(static_cast<int>(c.count(Side::A)), static_cast<int>(c.count(Side::B)));
    std::string key = connected_code(c);
    key += ops.suffix();
    if (auto hit = memo.find(key)) return *hit;
    auto sum = ops.zero();
    for (auto [v, copies] : twin_classes(c)) {
      auto term = value(c, ops, memo, v);
      term *= Rational(copies);
      sum += term;
    }
    sum *= Rational(1, static_cast<unsigned long>(c.size()));
    remember(memo, key, sum);
    return sum;
  }

  // One representative per class of vertices with equal neighbourhoods (such
  // vertices share a side and their deletions are isomorphic), with class size.
  static std::vector<std::pair<int, int>> twin_classes(const BipGraph& c) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(c.size()); ++v) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& r) { return c.neighbors(r.first) == c.neighbors(v); });
      if (it == out.end()) out.emplace_back(v, 1);
      else ++it->second;
    }
    return out;
  }

  Rational alt_value(const BipGraph& h, int skip) {
    Rational acc(1);
    for (auto& comp : h.component_indices(skip)) {
      if (comp.size() == 1) continue;
      acc *= alt_connected(h.induced(std::move(comp)));
    }
    return acc;
  }

  Rational alt_connected(const BipGraph& c) {
    const unsigned long a = c.count(Side::A), b = c.count(Side::B);
    if (c.is_complete_bipartite()) {
      Integer num, den;
      mpz_fac_ui(num.get_mpz_t(), a);
      Integer fb;
      mpz_fac_ui(fb.get_mpz_t(), b);
      mpz_fac_ui(den.get_mpz_t(), a + b);
      return make_rational(num * fb, den);
    }
    std::string key = "alt:" + connected_code(c);
    if (auto hit = alt_memo_.find(key)) return *hit;
    Rational sum(0);
    for (auto [v, copies] : twin_classes(c))
      if (v < static_cast<int>(a)) sum += copies * alt_value(c, v);
    sum /= Rational(static_cast<unsigned long>(c.size()));
    remember(alt_memo_, key, sum);
    return sum;
  }

  template <class Memo, class Value>
  void remember(Memo& memo, const std::string& key, const Value& v) {
    if (memo_entries() >= options_.max_memo_entries)
      throw Error(ErrorCode::BudgetExceeded, "memo budget of " + std::to_string(options_.max_memo_entries) +
                                                 " entries exhausted (" + std::to_string(poly_memo_.size()) +
                                                 " polynomials, " + std::to_string(eval_memo_.size()) + " values, " +
                                                 std::to_string(alt_memo_.size()) + " alternating numbers cached)");
    memo.insert(key, v);
  }

  EngineOptions options_;
  ConcurrentMemo<BiPoly> poly_memo_;
  ConcurrentMemo<Rational> eval_memo_;
  ConcurrentMemo<Rational> alt_memo_;
};

inline Engine& default_engine() {
  static Engine engine;
  return engine;
}

inline BiPoly compute_poly(const BipGraph& h) { return default_engine().poly(h); }
inline Rational evaluate(const BipGraph& h, const EvalPoint& pt) { return default_engine().evaluate(h, pt); }
inline Rational alt(const BipGraph& h) { return default_engine().alt(h); }

// S(a,b,c) = value of H(a,b,c) at a fixed point, for every a <= amax,
// c <= b <= bmax, c <= cmax, filled bottom-up from the boundary families.
class HabcTable {
 public:
  HabcTable(int amax, int bmax, int cmax, EvalPoint pt)
      : amax_(amax), bmax_(bmax), cmax_(std::min(cmax, bmax)), pt_(std::move(pt)) {
    if (amax < 0 || bmax < 0 || cmax < 0) throw Error(ErrorCode::InvalidSpec, "negative H(a,b,c) bound");
    table_.resize(static_cast<std::size_t>((amax_ + 1) * (bmax_ + 1) * (cmax_ + 1)));
    const Rational half_sum = (pt_.x + pt_.y) / 2;
    for (int a = 0; a <= amax_; ++a)
      for (int b = 0; b <= bmax_; ++b)
        for (int c = 0; c <= std::min(b, cmax_); ++c) {
          Rational& s = at_mut(a, b, c);
          if (a == 0) {
            s = pow(half_sum, static_cast<unsigned>(c)) * pow(pt_.y, static_cast<unsigned>(b - c));
          } else if (b == 0) {
            s = pow(pt_.x, static_cast<unsigned>(a));
          } else if (c == 0) {
            s = complete_bipartite_poly(a, b).eval(pt_.x, pt_.y);
          } else {
            Rational sum = a * at(a - 1, b, c);
            sum += c * pt_.x * at(a, b - 1, c - 1);
            if (b > c) sum += (b - c) * at(a, b - 1, c);
            sum += c * at(a, b, c - 1);
            s = sum / (a + b + c);
          }
        }
  }

  const Rational& at(int a, int b, int c) const {
    if (a < 0 || a > amax_ || b < 0 || b > bmax_ || c < 0 || c > std::min(b, cmax_))
      throw Error(ErrorCode::InvalidSpec, "H(a,b,c) outside the table");
    return table_[index(a, b, c)];
  }

  const EvalPoint& point() const { return pt_; }

 private:
  std::size_t index(int a, int b, int c) const {
    return static_cast<std::size_t>((a * (bmax_ + 1) + b) * (cmax_ + 1) + c);
  }
  Rational& at_mut(int a, int b, int c) { return table_[index(a, b, c)]; }

  int amax_, bmax_, cmax_;
  EvalPoint pt_;
  std::vector<Rational> table_;
};

inline Rational habc_eval(const HabcSpec& spec, const EvalPoint& pt) {
  spec.validate();
  return HabcTable(spec.a, spec.b, spec.c, pt).at(spec.a, spec.b, spec.c);
}

// Volume of {0 <= t <= 1, t_i + t_j <= 1 on edges} for a simple graph, via
// isolated-vertex factoring, component products and the averaged deletion
// recursion alt(G) = (1/2n) sum_v alt(G - v).
class GeneralAlt {
 public:
  Rational operator()(const MultiGraph& g) {
    if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "alternating number needs a simple graph");
    return of(g.simple_adjacency());
  }

 private:
  using Adjacency = std::vector<std::vector<int>>;

  static Adjacency induced(const Adjacency& adj, const std::vector<int>& keep) {
    std::vector<int> remap(adj.size(), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) remap[keep[k]] = static_cast<int>(k);
    Adjacency out(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k)
      for (int w : adj[keep[k]])
        if (remap[w] >= 0) out[k].push_back(remap[w]);
    return out;
  }

  Rational of(const Adjacency& adj, int skip = -1) {
    std::vector<int> comp_of(adj.size(), -1);
    if (skip >= 0) comp_of[skip] = -2;
    Rational acc(1);
    for (std::size_t s = 0; s < adj.size(); ++s) {
      if (comp_of[s] != -1) continue;
      std::vector<int> comp{static_cast<int>(s)};
      comp_of[s] = static_cast<int>(s);
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (int w : adj[comp[k]])
          if (comp_of[w] == -1) {
            comp_of[w] = static_cast<int>(s);
            comp.push_back(w);
          }
      if (comp.size() == 1) continue;
      std::sort(comp.begin(), comp.end());
      acc *= connected(induced(adj, comp));
    }
    return acc;
  }

  Rational connected(const Adjacency& adj) {
    std::string key = simple_graph_code(adj);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational sum(0);
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) sum += of(adj, v);
    sum /= Rational(2 * static_cast<unsigned long>(adj.size()));
    memo_.emplace(std::move(key), sum);
    return sum;
  }

  std::unordered_map<std::string, Rational> memo_;
};

inline Rational alt_general(const MultiGraph& g) { return GeneralAlt{}(g); }

// Average over all orderings of the product of weights of the active
// vertices, for a simple graph without sides.
inline Rational multivar_brute_force(const MultiGraph& g, const std::vector<Rational>& weights,
                                     int limit = kDefaultBruteForceLimit) {
  if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "multivariate activity polynomial needs a simple graph");
  const int n = g.vertex_count();
  if (n > limit || n > 20) throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds the brute-force limit");
  if (static_cast<int>(weights.size()) != n) throw Error(ErrorCode::InvalidArgs, "one weight per vertex required");
  auto adj = g.simple_adjacency();
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) nbr[v] |= 1u << w;
  std::vector<std::uint64_t> by_active_set(std::size_t{1} << n, 0);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t total = 0;
  do {
    std::uint32_t seen = 0, active = 0;
    for (int v : order) {
      if ((nbr[v] & ~seen) == 0) active |= 1u << v;
      seen |= 1u << v;
    }
    ++by_active_set[active];
    ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  Rational sum(0);
  for (std::size_t set = 0; set < by_active_set.size(); ++set) {
    if (!by_active_set[set]) continue;
    Rational prod(static_cast<unsigned long>(by_active_set[set]));
    for (int v = 0; v < n; ++v)
      if (set >> v & 1u) prod *= weights[v];
    sum += prod;
  }
  return sum / Rational(static_cast<unsigned long>(total));
}

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

namespace detail {
// Welford accumulator.
class RunningStats {
 public:
  void add(double v) {
    ++n_;
    double d = v - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (v - mean_);
  }
  McEstimate finish(std::uint64_t seed) const {
    double var = n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
    return {mean_, std::sqrt(var / static_cast<double>(n_)), n_, seed};
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0, m2_ = 0.0;
};
}  // namespace detail

// Unbiased estimate of T~_H(x, y) from i.i.d. uniform vertex labels.
inline McEstimate monte_carlo_eval(const BipGraph& h, double x, double y, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgs, "at least one sample required");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int m = static_cast<int>(h.size());
  std::vector<double> label(static_cast<std::size_t>(m));
  detail::RunningStats stats;
  for (std::uint64_t s = 0; s < samples; ++s) {
    bool tie;
    int ia, ea;
    do {
      for (auto& l : label) l = unit(rng);
      tie = false;
      ia = ea = 0;
      for (int v = 0; v < m && !tie; ++v) {
        bool active = true;
        for (int w : h.neighbors(v)) {
          if (label[w] == label[v]) tie = true;
          if (label[w] >= label[v]) active = false;
        }
        if (active) ++(h.side(v) == Side::A ? ia : ea);
      }
    } while (tie);
    stats.add(std::pow(x, ia) * std::pow(y, ea));
  }
  return stats.finish(seed);
}

// Frequency with which `tree` is the maximum-weight spanning tree under i.i.d.
// uniform edge weights (Kruskal on descending weights).
inline McEstimate mc_max_tree_prob(const MultiGraph& g, EdgeLabels tree, std::uint64_t samples, std::uint64_t seed) {
  if (!is_spanning_tree(g, tree)) throw Error(ErrorCode::NotSpanningTree, "edge set is not a spanning tree");
  if (samples < 1) throw Error(ErrorCode::InvalidArgs, "at least one sample required");
  std::sort(tree.begin(), tree.end());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int m = g.edge_count();
  std::vector<double> weight(static_cast<std::size_t>(m));
  std::vector<int> order(static_cast<std::size_t>(m));
  detail::RunningStats stats;
  for (std::uint64_t s = 0; s < samples; ++s) {
    bool tie;
    do {
      for (auto& w : weight) w = unit(rng);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int l, int r) { return weight[l] > weight[r]; });
      tie = false;
      for (int k = 1; k < m; ++k)
        if (weight[order[k]] == weight[order[k - 1]]) tie = true;
    } while (tie);
    detail::DisjointSets dsu(g.vertex_count() + 1);
    EdgeLabels best;
    for (int k : order) {
      auto [u, v] = g.edges()[static_cast<std::size_t>(k)];
      if (dsu.unite(u, v)) best.push_back(k + 1);
    }
    std::sort(best.begin(), best.end());
    stats.add(best == tree ? 1.0 : 0.0);
  }
  return stats.finish(seed);
}

}  // namespace ptutte
