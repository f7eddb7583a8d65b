#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tgk/exact_count.hpp"

namespace tgk {
namespace {

GraphletCode unlabeled(std::vector<SlotPair> p) { return GraphletCode{std::move(p), {}}; }

// Node ids follow the figure; node 0 is unused.
TemporalGraph fig2a() { return TemporalGraph(4, {{1, 2, 3}, {2, 3, 1}, {2, 3, 2}}); }
TemporalGraph fig2d() { return TemporalGraph(4, {{1, 2, 3}, {2, 3, 2}, {3, 1, 1}}); }

CountConfig cfg(TimeWindow d, NodeCountSet ks, std::size_t ell, bool labeled = false) {
  return CountConfig{d, ks, ell, labeled};
}

TEST(BruteForce, SinglePath) {
  TemporalGraph g(3, {{0, 1, 1}, {1, 2, 2}});
  auto fv = count_brute_force(g, cfg(TimeWindow::of(10), {3}, 2));
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv.at(unlabeled({{0, 1}, {1, 2}})), 1.0);
}

TEST(BruteForce, WindowIsInclusive) {
  TemporalGraph g(3, {{0, 1, 1}, {1, 2, 2}});
  EXPECT_EQ(count_brute_force(g, cfg(TimeWindow::of(1), {3}, 2)).total(), 1.0);
  TemporalGraph h(3, {{0, 1, 1}, {1, 2, 3}});
  EXPECT_EQ(count_brute_force(h, cfg(TimeWindow::of(1), {3}, 2)).total(), 0.0);
}

TEST(BruteForce, Fig2dTriangleAndWedges) {
  auto tri = count_brute_force(fig2d(), cfg(TimeWindow::of(10), {3}, 3));
  ASSERT_EQ(tri.size(), 1u);
  EXPECT_EQ(family_of(tri.begin()->first), GraphletFamily::Triangle);
  EXPECT_EQ(tri.total(), 1.0);
  EXPECT_EQ(count_brute_force(fig2d(), cfg(TimeWindow::of(10), {3}, 2)).total(), 3.0);
}

TEST(BruteForce, GuardAndOverride) {
  std::vector<TemporalEdge> es;
  for (int i = 0; i < 70; ++i) es.push_back({0, 1, i});
  TemporalGraph g(2, es);
  EXPECT_THROW(count_brute_force(g, cfg(TimeWindow::of(1), {2}, 2)), SizeError);
  EXPECT_EQ(count_brute_force(g, cfg(TimeWindow::of(1), {2}, 2), 100).total(), 69.0);
}

TEST(Wedges, Fig2aHostGraph) {
  auto fv = count_wedges(fig2a(), TimeWindow::of(10), false);
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv.at(unlabeled({{0, 1}, {2, 0}})), 2.0);
  EXPECT_EQ(fv, count_brute_force(fig2a(), cfg(TimeWindow::of(10), {3}, 2)));
}

TEST(Wedges, OutStar) {
  TemporalGraph g(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
  auto fv = count_wedges(g, TimeWindow::of(10), false);
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv.at(unlabeled({{0, 1}, {0, 2}})), 3.0);
}

TEST(Wedges, ParallelEdgesAreNotWedges) {
  TemporalGraph g(2, {{0, 1, 1}, {0, 1, 2}});
  EXPECT_TRUE(count_wedges(g, TimeWindow::unbounded(), true).empty());
}

TEST(Wedges, EqualTimesNeverPair) {
  TemporalGraph g(3, {{0, 1, 5}, {1, 2, 5}});
  EXPECT_TRUE(count_wedges(g, TimeWindow::unbounded(), false).empty());
}

TEST(Stars, Fig2aHostGraph) {
  auto fv = count_stars(fig2a(), TimeWindow::of(10), false);
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv.at(unlabeled({{0, 1}, {0, 1}, {2, 0}})), 1.0);
  EXPECT_TRUE(count_stars(fig2a(), TimeWindow::of(1), false).empty());
}

TEST(Stars, ThreeDistinctNeighborsIsNotAStar3) {
  TemporalGraph g(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
  EXPECT_TRUE(count_stars(g, TimeWindow::of(10), false).empty());
}

TEST(Triangles, Fig2d) {
  auto fv = count_triangles(fig2d(), TimeWindow::of(10), false);
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv.at(unlabeled({{0, 1}, {2, 0}, {1, 2}})), 1.0);
  EXPECT_TRUE(count_triangles(fig2d(), TimeWindow::of(1), false).empty());
}

TEST(Triangles, TwoTrianglesSharingAnEdge) {
  TemporalGraph g(4, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}, {2, 3, 4}, {3, 1, 5}});
  auto oracle = filter_family(count_brute_force(g, cfg(TimeWindow::of(10), {3}, 3)), GraphletFamily::Triangle);
  EXPECT_EQ(oracle.total(), 2.0);
  EXPECT_EQ(count_triangles(g, TimeWindow::of(10), false), oracle);
}

TEST(General, Fig2dTriangleOnly) {
  auto fv = count_general(fig2d(), cfg(TimeWindow::of(10), {3}, 3));
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(family_of(fv.begin()->first), GraphletFamily::Triangle);
  EXPECT_EQ(fv.total(), 1.0);
}

TEST(General, Fig2aOneStarNoTwoNode) {
  auto fv = count_general(fig2a(), cfg(TimeWindow::of(10), {2, 3}, 3));
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv.at(unlabeled({{0, 1}, {0, 1}, {2, 0}})), 1.0);
}

TEST(General, RejectsUnsupportedNodeCounts) {
  EXPECT_THROW(count_general(fig2a(), cfg(TimeWindow::of(10), {4}, 3)), UnsupportedError);
}

TEST(General, FamilyFlagConsistency) {
  EXPECT_THROW(count_exact(fig2a(), cfg(TimeWindow::of(10), {3}, 3), CountFamily::Wedge), InputError);
  EXPECT_THROW(count_exact(fig2a(), cfg(TimeWindow::of(10), {3}, 2), CountFamily::Star), InputError);
}

// Every fast counter agrees with the definition, class by class.
TEST(OracleEquivalence, RandomGraphs) {
  std::mt19937_64 rng(20240611);
  const TimeWindow windows[] = {TimeWindow::of(1), TimeWindow::of(5), TimeWindow::unbounded()};
  for (int it = 0; it < 120; ++it) {
    testing::RandomGraphSpec spec;
    spec.alphabet = 1 + it % 2;
    auto g = testing::random_graph(rng, spec);
    for (auto w : windows) {
      for (bool labeled : {false, true}) {
        SCOPED_TRACE("iteration " + std::to_string(it) + " delta " + w.to_string());
        auto wedge_oracle = count_brute_force(g, cfg(w, {3}, 2, labeled));
        ASSERT_EQ(count_wedges(g, w, labeled), wedge_oracle);
        ASSERT_EQ(count_general(g, cfg(w, {3}, 2, labeled)), wedge_oracle);

        auto three = count_brute_force(g, cfg(w, {2, 3}, 3, labeled));
        ASSERT_EQ(count_stars(g, w, labeled), filter_family(three, GraphletFamily::Star3));
        ASSERT_EQ(count_triangles(g, w, labeled), filter_family(three, GraphletFamily::Triangle));
        ASSERT_EQ(count_general(g, cfg(w, {2, 3}, 3, labeled)), three);
        ASSERT_EQ(count_general(g, cfg(w, {2}, 2, labeled)), count_brute_force(g, cfg(w, {2}, 2, labeled)));
      }
    }
  }
}

TEST(OracleEquivalence, LongerSequences) {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 25; ++it) {
    testing::RandomGraphSpec spec;
    spec.max_nodes = 6;
    spec.max_edges = 18;
    auto g = testing::random_graph(rng, spec);
    auto c = cfg(TimeWindow::of(8), {2, 3}, 4, true);
    ASSERT_EQ(count_general(g, c), count_brute_force(g, c));
  }
}

TEST(Properties, DecompositionStarsPlusTriangles) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    auto g = testing::random_graph(rng);
    auto w = TimeWindow::of(6);
    EXPECT_EQ(count_general(g, cfg(w, {3}, 3, true)), merge(count_stars(g, w, true), count_triangles(g, w, true)));
  }
}

TEST(Properties, MonotoneInDelta) {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 30; ++it) {
    auto g = testing::random_graph(rng);
    auto small = count_general(g, cfg(TimeWindow::of(2), {2, 3}, 3, true));
    auto large = count_general(g, cfg(TimeWindow::of(7), {2, 3}, 3, true));
    for (const auto& [code, n] : small) EXPECT_LE(n, large.at(code));
  }
}

TEST(Properties, LabelConsistency) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 30; ++it) {
    testing::RandomGraphSpec spec;
    spec.alphabet = 2;
    auto g = testing::random_graph(rng, spec);
    auto labeled = count_general(g, cfg(TimeWindow::of(5), {2, 3}, 3, true));
    auto plain = count_general(g, cfg(TimeWindow::of(5), {2, 3}, 3, false));
    FeatureVector summed;
    for (const auto& [code, n] : labeled) summed.add(GraphletCode{code.pattern, {}}, n);
    EXPECT_EQ(summed, plain);
  }
  // With L = 1 each structural class carries the all-zero label sequence.
  testing::RandomGraphSpec spec;
  spec.alphabet = 1;
  auto g = testing::random_graph(rng, spec);
  auto labeled = count_wedges(g, TimeWindow::unbounded(), true);
  auto plain = count_wedges(g, TimeWindow::unbounded(), false);
  ASSERT_EQ(labeled.size(), plain.size());
  for (const auto& [code, n] : labeled) EXPECT_EQ(plain.at(GraphletCode{code.pattern, {}}), n);
}

TEST(Properties, TimeShiftInvariance) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 30; ++it) {
    auto g = testing::random_graph(rng);
    auto h = testing::shifted(g, 1000);
    auto c = cfg(TimeWindow::of(4), {2, 3}, 3, true);
    EXPECT_EQ(count_general(g, c), count_general(h, c));
    EXPECT_EQ(count_wedges(g, c.delta, true), count_wedges(h, c.delta, true));
  }
}

}  // namespace
}  // namespace tgk
