#include <gtest/gtest.h>

#include "dragon/counting.hpp"
#include "dragon/region.hpp"
#include "oracles.hpp"

using namespace dragon;

namespace {

std::set<VertexLabel> labelsOf(const DualGraph& g) {
  std::set<VertexLabel> out;
  for (const auto& v : g.vertices()) out.insert(v.label);
  return out;
}

DualGraph pathGraph(std::size_t n) {
  std::vector<GraphVertex> vs;
  std::vector<GraphEdge> es;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back({static_cast<VertexLabel>(i), std::nullopt, i % 2 ? Color::Black : Color::White,
                  {static_cast<std::int64_t>(6 * i), 0}});
    if (i > 0) es.push_back({i - 1, i, 1});
  }
  return DualGraph::build(vs, es);
}

// Small deterministic generator for property tests.
struct Lcg {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
};

std::vector<DualGraph> corpus() {
  std::vector<DualGraph> out{cycleGraph(4), cycleGraph(6), cycleGraph(8), pathGraph(2), pathGraph(3),
                             pathGraph(6)};
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t c = 2; c <= 5; ++c) out.push_back(gridGraph(r, c));
  }
  for (Family f : {Family::F1, Family::F2}) {
    for (const auto& s : enumerateValid(f, 13)) out.push_back(dualOf(buildRegion(s)));
  }
  return out;
}

}  // namespace

TEST(DualGraph, EmptyRegion) {
  const DualGraph g = dualOf(std::vector<FaceId>{});
  EXPECT_TRUE(g.empty());
  EXPECT_EQ(g.edgeCount(), 0u);
}

TEST(DualGraph, AztecDragonOrderOne) {
  const DualGraph g = dualOf(buildRegion(deriveSides(Family::F1, 1, 1, 0)));
  EXPECT_EQ(g.countColor(Color::Black), g.countColor(Color::White));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const Arc& a : g.arcs(i)) EXPECT_NE(g.vertex(i).color, g.vertex(a.to).color);
  }
  EXPECT_EQ(oracle::naiveMatchings(g), 4);
}

TEST(DualGraph, BuildRejectsBadInput) {
  std::vector<GraphVertex> vs{{0, std::nullopt, Color::White, {0, 0}}, {0, std::nullopt, Color::Black, {6, 0}}};
  const std::vector<GraphEdge> one{{0, 1, 0}};
  EXPECT_THROW(DualGraph::build(vs, one), GraphError);
  vs[1].label = 1;
  vs[1].color = Color::White;
  EXPECT_THROW(DualGraph::build(vs, one), GraphError);
  vs[1].color = Color::Black;
  const std::vector<GraphEdge> loop{{0, 0, 0}};
  EXPECT_THROW(DualGraph::build(vs, loop), GraphError);
  const std::vector<GraphEdge> twice{{0, 1, 0}, {1, 0, 0}};
  EXPECT_THROW(DualGraph::build(vs, twice), GraphError);
}

TEST(DualGraph, DeleteVertices) {
  const DualGraph c4 = cycleGraph(4);
  EXPECT_TRUE(deleteVertices(c4, labelsOf(c4)).empty());
  const DualGraph same = deleteVertices(c4, {});
  EXPECT_EQ(same.edges(), c4.edges());
  const DualGraph edge = deleteVertices(c4, {0, 1});
  EXPECT_EQ(edge.size(), 2u);
  EXPECT_EQ(edge.edgeCount(), 1u);
  EXPECT_THROW(deleteVertices(c4, {99}), GraphError);
}

TEST(DualGraph, DeleteVerticesComposes) {
  Lcg rng{7};
  for (const DualGraph& g : corpus()) {
    if (g.size() < 4) continue;
    for (int trial = 0; trial < 5; ++trial) {
      std::set<VertexLabel> s;
      std::set<VertexLabel> t;
      for (const auto& v : g.vertices()) {
        const auto r = rng.next() % 5;
        if (r == 0) s.insert(v.label);
        if (r == 1) t.insert(v.label);
      }
      std::set<VertexLabel> both = s;
      both.insert(t.begin(), t.end());
      const DualGraph once = deleteVertices(g, both);
      const DualGraph twice = deleteVertices(deleteVertices(g, s), t);
      EXPECT_EQ(labelsOf(once), labelsOf(twice));
      EXPECT_EQ(once.edgeCount(), twice.edgeCount());
      EXPECT_EQ(writeGraphText(once), writeGraphText(twice));
    }
  }
}

TEST(DualGraph, ReduceForcedExamples) {
  const ReductionResult edge = reduceForced(pathGraph(2));
  EXPECT_TRUE(edge.feasible);
  EXPECT_TRUE(edge.reduced.empty());
  EXPECT_EQ(edge.forcedWeightExp, 1);
  EXPECT_FALSE(reduceForced(pathGraph(3)).feasible);
  const ReductionResult c4 = reduceForced(cycleGraph(4));
  EXPECT_TRUE(c4.feasible);
  EXPECT_EQ(c4.reduced.size(), 4u);
  EXPECT_TRUE(c4.forcedEdges.empty());
}

TEST(DualGraph, ReduceForcedPreservesCounts) {
  for (const DualGraph& g : corpus()) {
    const ReductionResult r = reduceForced(g);
    if (r.feasible) EXPECT_EQ(oracle::naiveMatchings(g), oracle::naiveMatchings(r.reduced));
    else EXPECT_EQ(oracle::naiveMatchings(g), 0);
  }
}

TEST(DualGraph, ComponentsPartitionVertices) {
  const DualGraph g = deleteVertices(gridGraph(3, 3), {1, 4, 7});
  const auto comps = connectedComponents(g);
  EXPECT_EQ(comps.size(), 2u);
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  EXPECT_EQ(total, g.size());
}

TEST(DualGraph, FaceWalksSatisfyEuler) {
  for (const DualGraph& g : corpus()) {
    const auto walks = faceWalks(g);
    std::size_t darts = 0;
    std::size_t outer = 0;
    for (const auto& w : walks) {
      darts += w.vertices.size();
      outer += w.outer;
      if (!w.outer) EXPECT_GT(w.twiceArea, 0);
    }
    EXPECT_EQ(darts, 2 * g.edgeCount());
    EXPECT_EQ(outer, connectedComponents(g).size());
  }
}

TEST(DualGraph, DragonFaceWalksVisitVerticesOnce) {
  for (Family f : {Family::F1, Family::F2}) {
    for (const auto& s : enumerateValid(f, 21)) {
      const DualGraph g = dualOf(buildRegion(s));
      for (const auto& w : faceWalks(g)) {
        std::set<std::size_t> seen(w.vertices.begin(), w.vertices.end());
        EXPECT_EQ(seen.size(), w.vertices.size()) << s.label();
      }
    }
  }
}

TEST(DualGraph, TextRoundTrip) {
  for (const DualGraph& g : corpus()) {
    const std::string text = writeGraphText(g);
    const DualGraph back = readGraphText(text);
    EXPECT_EQ(writeGraphText(back), text);
    EXPECT_EQ(back.edges(), g.edges());
  }
  EXPECT_THROW(readGraphText("mg 2 1\nv 0 W Node 0 0 0 0\n"), GraphError);
}

TEST(DualGraph, WeightedDualUsesTileTypes) {
  const DualGraph g = weightedDualOf(buildRegion(deriveSides(Family::F1, 2, 2, 0)));
  for (const auto& e : g.edges()) {
    EXPECT_EQ(e.weightExp, tileWeightExp(*g.vertex(e.u).face, *g.vertex(e.v).face));
  }
  EXPECT_EQ(tileWeightExp({FaceKind::SquareE, 0, 0}, {FaceKind::Hex, 0, 0}), 1);
  EXPECT_EQ(tileWeightExp({FaceKind::SquareNE, 0, 0}, {FaceKind::Hex, 0, 0}), 0);
}
