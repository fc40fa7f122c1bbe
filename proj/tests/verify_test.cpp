#include <gtest/gtest.h>

#include <random>

#include "support/corpus.hpp"

using namespace ptutte;

namespace {

const std::vector<BipGraph>& corpus6() {
  static const auto graphs = bipartite_graphs(6);
  return graphs;
}

void expect_no_violation(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) EXPECT_FALSE(r.is_violation()) << r.to_json().dump();
}

std::size_t count_named(const std::vector<CheckReport>& reports, const std::string& name) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [&](const CheckReport& r) { return r.check_name == name; }));
}

}  // namespace

TEST(Compare, Relations) {
  auto r = compare("c", "i", Rational(3), ">=", Rational(2));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.margin, 1);
  EXPECT_FALSE(compare("c", "i", Rational(1), ">", Rational(1)).holds);
  EXPECT_TRUE(compare("c", "i", Rational(1), "==", Rational(1)).holds);
  auto open = compare("c", "i", Rational(0), ">=", Rational(1), CheckStatus::Open);
  EXPECT_FALSE(open.holds);
  EXPECT_FALSE(open.is_violation());
  EXPECT_THROW(compare("c", "i", Rational(0), "~", Rational(1)), Error);
  auto j = r.to_json();
  EXPECT_EQ(j["check"], "c");
  EXPECT_EQ(j["margin"], "1");
  EXPECT_EQ(j["status"], "proven");
  EXPECT_FALSE(not_applicable("c", "i").to_json().contains("lhs"));
}

TEST(Brylawski, PathFiveClosedForm) {
  auto p5 = path_graph(5);
  for (long h = 0; h < 5; ++h) EXPECT_EQ(brylawski_sum(p5, h), 0) << "h=" << h;
  EXPECT_EQ(brylawski_sum(p5, 5), make_rational(2, 15));
  EXPECT_EQ(brylawski_sum(p5, 6), make_rational(2, 15) * 3);
  EXPECT_EQ(brylawski_sum(p5, 7), make_rational(2, 15) * 6);
}

TEST(Brylawski, HoldsOnCorpus) {
  for (const auto& h : corpus6()) {
    auto reports = check_brylawski(h);
    EXPECT_EQ(reports.size(), h.size() + 4);
    for (const auto& r : reports) ASSERT_TRUE(r.holds) << r.to_json().dump();
  }
}

TEST(Brylawski, GraphicVersion) {
  auto tri = MultiGraph::make(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(brylawski_graph_sum(tri, 0), 0);
  EXPECT_EQ(brylawski_graph_sum(tri, 2), 0);
  EXPECT_EQ(brylawski_graph_sum(tri, 3), -1);
  EXPECT_EQ(brylawski_graph_closed_form(tri, 4), Rational(-2));
  for (const auto& g : connected_multigraphs(5))
    for (const auto& r : check_brylawski_graph(g)) ASSERT_TRUE(r.holds) << r.to_json().dump();
}

TEST(InequalitySuite, NoProvenViolationsOnCorpus) {
  for (const auto& h : corpus6()) expect_no_violation(check_inequality_suite(h));
}

TEST(InequalitySuite, ReportsNotApplicableForIsolatedVertices) {
  auto h = make_bipartite({1, 3}, {2}, {{1, 2}});
  auto reports = check_inequality_suite(h);
  for (const auto& r : reports)
    if (r.check_name == "product_x3" || r.check_name == "quadratic_4_0_2_2") {
      EXPECT_EQ(r.status, CheckStatus::NotApplicable);
    }
  expect_no_violation(reports);
}

TEST(InequalitySuite, FrozenPathValues) {
  auto reports = check_inequality_suite(path_graph(5));
  auto it = std::find_if(reports.begin(), reports.end(), [](const auto& r) { return r.check_name == "product_x3"; });
  ASSERT_NE(it, reports.end());
  EXPECT_EQ(it->lhs, make_rational(217, 25));
  auto q = std::find_if(reports.begin(), reports.end(), [](const auto& r) { return r.check_name == "quadratic_4_0_2_2"; });
  ASSERT_NE(q, reports.end());
  EXPECT_EQ(q->rhs, make_rational(64 * 64, 15 * 15));
}

TEST(InequalitySuite, RegularLineValues) {
  struct Case {
    BipGraph h;
    std::vector<Rational> values;
  };
  const std::vector<Case> cases{
      {complete_bipartite(3, 3), {Rational(1), Rational(23, 20), Rational(8, 5)}},
      {cycle_graph(8), {Rational(1), Rational(649, 560), Rational(176, 105)}},
  };
  const std::vector<Rational> xs{Rational(1), Rational(3, 2), Rational(2)};
  for (const auto& c : cases)
    for (std::size_t k = 0; k < xs.size(); ++k) EXPECT_EQ(evaluate(c.h, {xs[k], 2 - xs[k]}), c.values[k]);
  auto reports = check_inequality_suite(cycle_graph(8));
  EXPECT_EQ(count_named(reports, "regular_line"), 5u);
  expect_no_violation(reports);
}

TEST(InequalitySuite, DegreeProductBound) {
  auto star = complete_bipartite(1, 3);
  EXPECT_EQ(degree_product_bound(star, point(0, 2)), Rational(3, 4) * Rational(3, 2) * Rational(3, 2) * Rational(3, 2));
  EXPECT_GE(evaluate(star, point(0, 2)), degree_product_bound(star, point(0, 2)));
}

TEST(IdentitySuite, HoldsOnCorpus) {
  const std::vector<Rational> xs{Rational(3), Rational(-1, 2), Rational(7, 5), Rational(1, 3), Rational(-4)};
  for (const auto& h : bipartite_graphs(5)) {
    auto reports = check_identity_suite(h, xs);
    for (const auto& r : reports) ASSERT_TRUE(r.holds) << r.to_json().dump();
  }
}

TEST(IdentitySuite, ParabolaAtTwoIsAltTimesPower) {
  for (const auto& h : corpus6())
    EXPECT_EQ(evaluate(h, point(2, 2)), alt(h) * pow(Rational(2), static_cast<unsigned>(h.size())));
}

TEST(Gluing, TwoPaths) {
  auto p3 = path_graph(3);
  auto glued = glue(p3, 2, p3, 2);
  EXPECT_EQ(glued.size(), 5u);
  EXPECT_EQ(canonical_code(glued), canonical_code(complete_bipartite(4, 1)));
  auto [rooted, product] = check_gluing(p3, 2, p3, 2, Rational(2));
  EXPECT_EQ(rooted.check_name, "gluing_root_b");
  EXPECT_TRUE(rooted.holds);
  EXPECT_TRUE(product.holds);
  auto [ra, pa] = check_gluing(p3, 1, p3, 3, Rational(2));
  EXPECT_EQ(ra.check_name, "gluing_root_a");
  EXPECT_TRUE(ra.holds);
  EXPECT_TRUE(pa.holds);
  try {
    glue(p3, 1, p3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleSides);
  }
}

TEST(Gluing, AllSmallTreePairs) {
  std::vector<BipGraph> trees;
  for (int m = 2; m <= 5; ++m)
    for (auto& t : gen_free_trees(m)) trees.push_back(t);
  for (const auto& t1 : trees)
    for (const auto& t2 : trees)
      for (int v = 0; v < static_cast<int>(t1.size()); ++v)
        for (VertexId r2 : t2.side_ids(t1.side(v)))
          for (Rational x : {Rational(1), Rational(2), Rational(3)}) {
            auto [a, b] = check_gluing(t1, t1.id(v), t2, r2, x);
            ASSERT_FALSE(a.is_violation()) << a.to_json().dump();
            ASSERT_FALSE(b.is_violation()) << b.to_json().dump();
          }
}

TEST(LeafDeletion, TreesAndErrors) {
  for (int m = 3; m <= 8; ++m)
    for (const auto& t : gen_free_trees(m))
      for (int v = 0; v < static_cast<int>(t.size()); ++v)
        if (t.degree(v) == 1) {
          for (Rational x : {Rational(1), Rational(2), Rational(5, 2)})
            EXPECT_FALSE(check_leaf_deletion(t, t.id(v), x).is_violation());
        }
  try {
    check_leaf_deletion(path_graph(5), 3, Rational(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotALeaf);
  }
}

TEST(CounterexampleScan, FindsKnownInstance) {
  auto found = counterexample_scan({18, 20}, {20, 22}, {20, 22}, Rational(2));
  ASSERT_FALSE(found.empty());
  for (std::size_t k = 1; k < found.size(); ++k) EXPECT_LE(found[k - 1].margin, found[k].margin);
  auto it = std::find_if(found.begin(), found.end(), [](const auto& r) { return r.instance.rfind("H(19,21,21)", 0) == 0; });
  ASSERT_NE(it, found.end());
  EXPECT_EQ(to_decimal(it->margin, 4), "-0.0382");
  EXPECT_EQ(it->status, CheckStatus::Open);
  EXPECT_TRUE(counterexample_scan({1, 4}, {1, 4}, {0, 4}, Rational(3)).empty());
  EXPECT_THROW(counterexample_scan({3, 2}, {1, 1}, {0, 0}, Rational(2)), Error);
}

TEST(CompleteBipartite, ProductGrowsWithOrder) {
  Rational previous(0);
  for (int r = 2; r <= 6; ++r) {
    Rational p = cmw_product(complete_bipartite(r, r), Rational(2));
    EXPECT_GT(p, previous) << "r=" << r;
    EXPECT_GE(p, 1);
    previous = p;
  }
}
