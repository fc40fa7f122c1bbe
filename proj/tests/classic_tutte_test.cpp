#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/corpus.hpp"

using namespace ptutte;

namespace {

MultiGraph triangle() { return MultiGraph::make(3, {{1, 2}, {2, 3}, {1, 3}}); }

MultiGraph k4() { return MultiGraph::make(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

const char* kFigurePoly =
    "x^5 + 3*x^4 + x^3*y + 5*x^3 + 4*x^2*y + 2*x*y^2 + y^3 + 5*x^2 + 6*x*y + 3*y^2 + 2*x + 2*y";

EdgeLabeling random_labeling(std::mt19937_64& rng, int m) {
  EdgeLabeling l(static_cast<std::size_t>(m));
  std::iota(l.begin(), l.end(), 1);
  std::shuffle(l.begin(), l.end(), rng);
  return l;
}

}  // namespace

TEST(SubsetOracle, KnownPolynomials) {
  EXPECT_EQ(tutte_subset_oracle(triangle()), BiPoly::parse("x^2 + x + y"));
  EXPECT_EQ(tutte_subset_oracle(MultiGraph::make(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})),
            BiPoly::parse("x^3 + x^2 + x + y"));
  EXPECT_EQ(tutte_subset_oracle(MultiGraph::make(2, {{1, 2}, {1, 2}})), BiPoly::parse("x + y"));
  EXPECT_EQ(tutte_subset_oracle(MultiGraph::make(1, {{1, 1}})), BiPoly::y());
  EXPECT_EQ(tutte_subset_oracle(MultiGraph::make(2, {{1, 2}})), BiPoly::x());
  EXPECT_EQ(tutte_subset_oracle(MultiGraph::make(3, {})), BiPoly(Rational(1)));
  EXPECT_EQ(tutte_subset_oracle(corpus::figure_graph()), BiPoly::parse(kFigurePoly));
  EXPECT_EQ(tutte_subset_oracle(k4()), BiPoly::parse("x^3 + 3*x^2 + 4*x*y + 2*x + y^3 + 3*y^2 + 2*y"));
}

TEST(SubsetOracle, StandardSpecializations) {
  auto t = tutte_subset_oracle(k4());
  EXPECT_EQ(t.eval(1, 1), 16);
  EXPECT_EQ(t.eval(3, 0), 60);
  EXPECT_EQ(t.eval(0, 3), 60);
  auto tri = tutte_subset_oracle(triangle());
  EXPECT_EQ(tri.eval(2, 0), 6);
  EXPECT_EQ(tri.eval(0, 2), 2);
}

TEST(DelCon, MatchesSubsetOracle) {
  for (const auto& g : connected_multigraphs(6)) ASSERT_EQ(tutte_del_con(g), tutte_subset_oracle(g)) << describe(g);
  auto two = MultiGraph::make(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(tutte_del_con(two), BiPoly::parse("x^2"));
  EXPECT_EQ(tutte_del_con(two), tutte_subset_oracle(two));
}

TEST(DelCon, SpanningTreeCount) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 60; ++k) {
    auto g = corpus::random_connected_multigraph(rng, 8);
    EXPECT_EQ(tutte_del_con(g).eval(1, 1), Rational(static_cast<unsigned long>(spanning_trees(g).size())));
  }
}

TEST(ActivitiesPoly, LabelingInvariance) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    auto g = corpus::random_connected_multigraph(rng, 7);
    auto expected = tutte_subset_oracle(g);
    EXPECT_EQ(activities_poly(g, identity_labeling(g)), expected) << describe(g);
    for (int r = 0; r < 5; ++r) EXPECT_EQ(activities_poly(g, random_labeling(rng, g.edge_count())), expected);
  }
}

TEST(ActivitiesPoly, Preconditions) {
  try {
    activities_poly(MultiGraph::make(4, {{1, 2}, {3, 4}}), {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
  try {
    activities_poly(triangle(), {1, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgs);
  }
  EXPECT_THROW(activities_poly(triangle(), {1, 2}), Error);
}

TEST(Decompose, FigureGraph) {
  auto [dc, sum] = decompose_check(corpus::figure_graph());
  EXPECT_EQ(dc, BiPoly::parse(kFigurePoly));
  EXPECT_EQ(sum, dc);
  auto terms = decompose_terms(corpus::figure_graph());
  EXPECT_EQ(terms.size(), spanning_trees(corpus::figure_graph()).size());
  auto it = std::find_if(terms.begin(), terms.end(), [](const DecomposeTerm& t) { return t.tree == corpus::figure_tree(); });
  ASSERT_NE(it, terms.end());
  EXPECT_EQ(it->summand, compute_poly(local_basis_exchange(corpus::figure_graph(), corpus::figure_tree())));
}

TEST(Decompose, HoldsOnSmallCorpus) {
  for (const auto& g : connected_multigraphs(5)) {
    auto [dc, sum] = decompose_check(g);
    ASSERT_EQ(dc, sum) << describe(g);
  }
}

TEST(Decompose, TriangleTerms) {
  auto terms = decompose_terms(triangle());
  ASSERT_EQ(terms.size(), 3u);
  for (const auto& t : terms) EXPECT_EQ(t.summand, BiPoly::parse("1/3*x^2 + 1/3*x + 1/3*y"));
}

TEST(Transfer, ForestsAndTriangle) {
  const std::array<EvalPoint, 3> pts{point(3, 0), point(0, 3), point(1, 1)};
  auto rep = transfer_check(triangle(), pts);
  EXPECT_EQ(rep.tutte_lhs, tutte_subset_oracle(triangle()).eval(3, 0) * tutte_subset_oracle(triangle()).eval(0, 3));
  EXPECT_EQ(rep.trees.size(), 3u);
  EXPECT_EQ(rep.tutte_holds, rep.tutte_lhs >= rep.tutte_rhs);
  EXPECT_TRUE(rep.all_trees_hold);
  EXPECT_TRUE(rep.tutte_holds);
  auto k = transfer_check(k4(), pts);
  EXPECT_EQ(k.tutte_lhs, Rational(3600));
  EXPECT_EQ(k.tutte_rhs, Rational(256));
  EXPECT_TRUE(k.tutte_holds);
  EXPECT_THROW(transfer_check(triangle(), {point(-1, 0), point(0, 3), point(1, 1)}), Error);
}

TEST(Transfer, TreeInequalitiesImplyGraphInequality) {
  const std::array<EvalPoint, 3> pts{point(2, 0), point(0, 2), point(1, 1)};
  for (const auto& g : connected_multigraphs(5)) {
    auto rep = transfer_check(g, pts);
    if (rep.all_trees_hold) {
      EXPECT_TRUE(rep.tutte_holds) << describe(g);
    }
  }
}
