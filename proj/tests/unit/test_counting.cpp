#include <gtest/gtest.h>

#include "dragon/counting.hpp"
#include "dragon/region.hpp"
#include "oracles.hpp"

using namespace dragon;

namespace {

DualGraph singleEdge(int weightExp) {
  const std::vector<GraphVertex> vs{{0, std::nullopt, Color::White, {0, 0}}, {1, std::nullopt, Color::Black, {6, 0}}};
  const std::vector<GraphEdge> es{{0, 1, weightExp}};
  return DualGraph::build(vs, es);
}

DualGraph triangleFree3() {
  const std::vector<GraphVertex> vs{{0, std::nullopt, Color::White, {0, 0}},
                                    {1, std::nullopt, Color::Black, {6, 0}},
                                    {2, std::nullopt, Color::White, {12, 0}}};
  const std::vector<GraphEdge> es{{0, 1, 0}, {1, 2, 0}};
  return DualGraph::build(vs, es);
}

}  // namespace

TEST(Counting, SmallExamples) {
  for (Counter c : {Counter::Brute, Counter::Kasteleyn}) {
    EXPECT_EQ(countMatchings(DualGraph{}, c), 1) << counterName(c);
    EXPECT_EQ(countMatchings(triangleFree3(), c), 0) << counterName(c);
    EXPECT_EQ(countMatchings(singleEdge(0), c), 1) << counterName(c);
    EXPECT_EQ(countMatchings(cycleGraph(4), c), 2) << counterName(c);
    EXPECT_EQ(countMatchings(cycleGraph(6), c), 2) << counterName(c);
    EXPECT_EQ(countMatchings(gridGraph(2, 3), c), 3) << counterName(c);
  }
}

TEST(Counting, AztecDragons) {
  EXPECT_EQ(countBrute(dualOf(buildRegion(deriveSides(Family::F1, 1, 1, 0)))), 4);
  EXPECT_EQ(countKasteleyn(dualOf(buildRegion(deriveSides(Family::F1, 2, 2, 0)))), 64);
}

TEST(Counting, GridsMatchNaiveOracle) {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t c = 2; c <= 6; ++c) {
      const DualGraph g = gridGraph(r, c);
      const mpz_class expected = oracle::naiveMatchings(g);
      EXPECT_EQ(countBrute(g), expected) << r << "x" << c;
      EXPECT_EQ(countKasteleyn(g), expected) << r << "x" << c;
    }
  }
  // Domino tilings of the 8x8 board.
  EXPECT_EQ(countKasteleyn(gridGraph(8, 8)), 12988816);
  EXPECT_EQ(countBrute(gridGraph(8, 8)), 12988816);
}

TEST(Counting, DragonsMatchNaiveOracle) {
  for (Family f : {Family::F1, Family::F2}) {
    for (const auto& s : enumerateValid(f, 13)) {
      const DualGraph g = dualOf(buildRegion(s));
      const mpz_class expected = oracle::naiveMatchings(g);
      EXPECT_EQ(countBrute(g), expected) << s.label();
      EXPECT_EQ(countKasteleyn(g), expected) << s.label();
    }
  }
}

TEST(Counting, DeletionsKeepCountersInAgreement) {
  const DualGraph g = dualOf(buildRegion(deriveSides(Family::F1, 3, 3, 1)));
  for (std::size_t i = 0; i + 1 < g.size(); i += 3) {
    const DualGraph h = deleteVertices(g, {g.vertex(i).label, g.vertex(i + 1).label});
    EXPECT_EQ(countBrute(h), countKasteleyn(h)) << i;
    EXPECT_EQ(countBrute(h), oracle::naiveMatchings(h)) << i;
  }
}

TEST(Counting, Weighted) {
  EXPECT_EQ(countWeighted(singleEdge(1)), WeightPoly::monomial(1));
  // C4 edges in cyclic order carry exponents 1, 0, 1, 0.
  const DualGraph c4 = cycleGraph(4);
  const DualGraph w = c4.withWeights([&](std::size_t u, std::size_t v) {
    const bool firstOrThird = (u == 0 && v == 1) || (u == 2 && v == 3);
    return firstOrThird ? 1 : 0;
  });
  EXPECT_EQ(countWeighted(w), WeightPoly::monomial(2) + WeightPoly::constant(1));
  for (std::size_t r = 2; r <= 4; ++r) {
    const DualGraph g = gridGraph(r, 4).withWeights([](std::size_t u, std::size_t v) { return (u * v) % 3; });
    EXPECT_EQ(countWeighted(g).evaluateAtOne(), countBrute(g));
  }
}

TEST(Counting, Factorize23) {
  EXPECT_EQ(factorize23(4), std::make_pair(2ul, 0ul));
  EXPECT_EQ(factorize23(144), std::make_pair(4ul, 2ul));
  EXPECT_EQ(factorize23(1), std::make_pair(0ul, 0ul));
  try {
    factorize23(7);
    FAIL() << "7 has a residual factor";
  } catch (const ResidualFactor& e) {
    EXPECT_EQ(e.residual(), 7);
  }
  EXPECT_THROW(factorize23(0), std::domain_error);
}

TEST(Counting, Bareiss) {
  EXPECT_EQ(bareissDeterminant({}), 1);
  EXPECT_EQ(bareissDeterminant({{2, 1}, {1, 3}}), 5);
  EXPECT_EQ(bareissDeterminant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(bareissDeterminant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
  EXPECT_EQ(bareissDeterminant({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 4);
}
