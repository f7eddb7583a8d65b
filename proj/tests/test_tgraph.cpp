#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "test_support.hpp"
#include "tgk/io.hpp"

namespace tgk {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("tgk_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

TEST(LabelAt, PredecessorLookup) {
  LabelTimeline one(0, {{5, 1}});
  EXPECT_EQ(one.at(4), 0u);
  EXPECT_EQ(one.at(5), 1u);
  LabelTimeline two(0, {{5, 1}, {9, 0}});
  EXPECT_EQ(two.at(7), 1u);
  EXPECT_EQ(two.at(9), 0u);
  EXPECT_EQ(two.at(1000000), 0u);
}

TEST(LabelAt, OutOfRangeNode) {
  TemporalGraph g(2, {{0, 1, 1}});
  EXPECT_THROW(label_at(g, 2, 0), InputError);
  EXPECT_THROW(degree(g, 5), InputError);
}

TEST(LabelTimeline, RejectsUnsortedEvents) {
  EXPECT_THROW(LabelTimeline(0, {{3, 1}, {3, 0}}), InputError);
}

TEST(Degree, Examples) {
  TemporalGraph path(4, {{0, 1, 1}, {1, 2, 2}});
  EXPECT_EQ(degree(path, 1), 2u);
  EXPECT_EQ(degree(path, 3), 0u);
  TemporalGraph par(2, {{0, 1, 1}, {0, 1, 2}});
  EXPECT_EQ(degree(par, 0), 2u);
}

TEST(Degree, SumIsTwiceEdges) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 50; ++it) {
    auto g = testing::random_graph(rng);
    std::size_t sum = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.num_edges());
  }
}

TEST(StaticProjection, Examples) {
  using Arcs = std::vector<std::pair<NodeId, NodeId>>;
  EXPECT_EQ(static_projection(TemporalGraph(2, {{0, 1, 1}, {0, 1, 7}})).arcs, (Arcs{{0, 1}}));
  EXPECT_TRUE(static_projection(TemporalGraph(3, {})).arcs.empty());
  EXPECT_EQ(static_projection(TemporalGraph(2, {{0, 1, 1}, {1, 0, 2}})).arcs, (Arcs{{0, 1}, {1, 0}}));
}

TEST(StaticProjection, ParallelEdgeDoesNotChangeArcs) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 30; ++it) {
    auto g = testing::random_graph(rng);
    if (g.num_edges() == 0) continue;
    std::vector<TemporalEdge> es(g.edges().begin(), g.edges().end());
    es.push_back({es[it % es.size()].source, es[it % es.size()].target, 99});
    TemporalGraph h(g.num_nodes(), es, {g.timelines().begin(), g.timelines().end()}, g.alphabet_size());
    EXPECT_EQ(static_projection(g).arcs, static_projection(h).arcs);
  }
}

TEST(TemporalGraph, SortsEdgesAndValidates) {
  TemporalGraph g(3, {{1, 2, 5}, {0, 1, 2}});
  EXPECT_EQ(g.edges()[0].time, 2);
  EXPECT_THROW(TemporalGraph(2, {{0, 0, 1}}), InputError);
  EXPECT_THROW(TemporalGraph(2, {{0, 2, 1}}), InputError);
  EXPECT_THROW(TemporalGraph(2, {{0, 1, -1}}), InputError);
  EXPECT_THROW(TemporalGraph(2, {}, {LabelTimeline(2), LabelTimeline(0)}, 2), InputError);
}

TEST(LoadGraph, Examples) {
  auto g = parse_graph("t 3 2 2\ne 0 1 1\ne 1 2 2\n");
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.alphabet_size(), 2u);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(g.label_at(v, 100), 0u);

  auto h = parse_graph("# comment\nt 3 2 2\ne 1 2 2 # trailing\ne 0 1 1\nl 1 5 1\n");
  EXPECT_EQ(h.label_at(1, 5), 1u);
  EXPECT_EQ(h.label_at(1, 4), 0u);
  EXPECT_EQ(h.edges()[0].time, 1);
}

TEST(LoadGraph, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("t 2 1 1\ne 0 0 1\n"), 2u);
  EXPECT_EQ(line_of("t 2 1 1\ne 0 2 1\n"), 2u);
  EXPECT_EQ(line_of("t 2 1 2\ne 0 1 1\nl 0 3 2\n"), 3u);
  EXPECT_EQ(line_of("t 2 1 1\nx 0 1 1\n"), 2u);
  EXPECT_EQ(line_of("t 2 1 1\ne 0 1\n"), 2u);
  EXPECT_EQ(line_of("e 0 1 1\n"), 1u);
  EXPECT_EQ(line_of("t 2 2 1\ne 0 1 1\n"), 1u);
}

TEST(LoadGraph, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    auto g = testing::random_graph(rng);
    auto h = parse_graph(format_graph(g));
    ASSERT_EQ(h.num_nodes(), g.num_nodes());
    ASSERT_EQ(h.alphabet_size(), g.alphabet_size());
    ASSERT_TRUE(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end()));
    Timestamp last = 0;
    for (const auto& tl : g.timelines())
      for (const auto& e : tl.events()) last = std::max(last, e.time);
    for (NodeId v = 0; v < g.num_nodes(); ++v)
      for (Timestamp t = 0; t <= last + 1; ++t) ASSERT_EQ(g.label_at(v, t), h.label_at(v, t));
  }
}

TEST(LoadDataset, ManifestDirectory) {
  auto dir = scratch_dir("manifest");
  write_file(dir / "g0.tg", "t 2 1 2\ne 0 1 1\n");
  write_file(dir / "g1.tg", "t 3 2 2\ne 0 1 1\ne 1 2 3\nl 2 4 1\n");
  write_file(dir / "manifest.txt", "g0 0\ng1 1\n");
  auto ds = load_dataset(dir);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds.ids(), (std::vector<std::string>{"g0", "g1"}));
  EXPECT_EQ(ds.class_labels(), (std::vector<int>{0, 1}));
  EXPECT_EQ(ds.graphs[1].graph.label_at(2, 4), 1u);
  fs::remove_all(dir);
}

TEST(LoadDataset, MissingGraphAndInconsistentAlphabet) {
  auto dir = scratch_dir("missing");
  write_file(dir / "g0.tg", "t 2 1 2\ne 0 1 1\n");
  write_file(dir / "manifest.txt", "g0 0\nnope 1\n");
  EXPECT_THROW(load_dataset(dir), LoadError);
  write_file(dir / "g1.tg", "t 2 1 3\ne 0 1 1\n");
  write_file(dir / "manifest.txt", "g0 0\ng1 1\n");
  EXPECT_THROW(load_dataset(dir), LoadError);
  fs::remove_all(dir);
}

TEST(LoadDataset, TuBundle) {
  auto dir = scratch_dir("tu");
  auto prefix = dir / "toy";
  auto put = [&](const std::string& suffix, const std::string& text) {
    auto p = prefix;
    p += suffix;
    write_file(p, text);
  };
  // graph 1: nodes 1..3, graph 2: nodes 4..5
  put("_A.txt", "1, 2\n2, 3\n4, 5\n");
  put("_edge_attributes.txt", "1\n2\n7\n");
  put("_graph_indicator.txt", "1\n1\n1\n2\n2\n");
  put("_graph_labels.txt", "0\n1\n");
  put("_node_labels.txt", "0, 1\n\n3, 1\n1\n0\n");
  auto ds = load_dataset(prefix);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds.alphabet_size(), 2u);
  EXPECT_EQ(ds.class_labels(), (std::vector<int>{0, 1}));
  const auto& g0 = ds.graphs[0].graph;
  EXPECT_EQ(g0.num_nodes(), 3u);
  EXPECT_EQ(g0.num_edges(), 2u);
  EXPECT_EQ(g0.label_at(0, 0), 1u);
  EXPECT_EQ(g0.label_at(1, 10), 0u);
  EXPECT_EQ(g0.label_at(2, 2), 0u);
  EXPECT_EQ(g0.label_at(2, 3), 1u);
  const auto& g1 = ds.graphs[1].graph;
  EXPECT_EQ(g1.edges()[0], (TemporalEdge{0, 1, 7}));
  EXPECT_EQ(g1.label_at(0, 0), 1u);
  fs::remove_all(dir);
}

TEST(SaveDataset, RoundTrip) {
  auto dir = scratch_dir("save");
  std::mt19937_64 rng(4);
  Dataset ds;
  for (int i = 0; i < 5; ++i) ds.add("g" + std::to_string(i), testing::random_graph(rng), i % 2);
  save_dataset(dir, ds);
  auto back = load_dataset(dir);
  ASSERT_EQ(back.size(), ds.size());
  EXPECT_EQ(back.ids(), ds.ids());
  EXPECT_EQ(back.class_labels(), ds.class_labels());
  for (std::size_t i = 0; i < ds.size(); ++i)
    EXPECT_EQ(format_graph(back.graphs[i].graph), format_graph(ds.graphs[i].graph));
  fs::remove_all(dir);
}

}  // namespace
}  // namespace tgk
