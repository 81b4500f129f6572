#include <gtest/gtest.h>

#include "dragon/counting.hpp"
#include "dragon/region.hpp"

using namespace dragon;

TEST(Region, BalanceOnValidSpecs) {
  for (Family f : {Family::F1, Family::F2}) {
    for (const ContourSpec& s : enumerateValid(f, 27)) {
      const auto [rawBlack, rawWhite] = balanceReport(selectRawRegion(s));
      EXPECT_EQ(rawWhite - rawBlack, 1) << s.label();
      const Region r = buildRegion(s);
      EXPECT_EQ(r.blackCount, r.whiteCount) << s.label();
      EXPECT_EQ(balanceReport(r.faces), std::make_pair(r.blackCount, r.whiteCount));
    }
  }
}

TEST(Region, EmptyBalance) { EXPECT_EQ(balanceReport({}), std::make_pair(0, 0)); }

TEST(Region, FacesAreSortedAndUnique) {
  const Region r = buildRegion(deriveSides(Family::F1, 8, 8, 3));
  EXPECT_TRUE(std::is_sorted(r.faces.begin(), r.faces.end()));
  EXPECT_EQ(std::adjacent_find(r.faces.begin(), r.faces.end()), r.faces.end());
  EXPECT_EQ(r.blackCount, r.whiteCount);
}

TEST(Region, DesignatedSides) {
  EXPECT_EQ(designatedSides(deriveSides(Family::F1, 5, 5, 0)), (std::vector<Side>{Side::B, Side::E}));
  EXPECT_EQ(designatedSides(deriveSides(Family::F1, 8, 8, 3)), (std::vector<Side>{Side::B, Side::E, Side::F}));
  EXPECT_EQ(designatedSides(deriveSides(Family::F2, 2, 3, 1)),
            (std::vector<Side>{Side::A, Side::C, Side::D, Side::F}));
  EXPECT_EQ(designatedSides(deriveSides(Family::F2, 8, 8, 2)), (std::vector<Side>{Side::A, Side::C, Side::D}));
}

TEST(Region, AztecDragonsCount) {
  EXPECT_EQ(countBrute(dualOf(buildRegion(deriveSides(Family::F1, 1, 1, 0)))), 4);
  EXPECT_EQ(countBrute(dualOf(buildRegion(deriveSides(Family::F1, 2, 2, 0)))), 64);
}

TEST(Region, HalfOrderDragon) {
  // The order-3/2 dragon graph has 2^(n(n+2)+1) = 16 matchings at n = 1.
  EXPECT_EQ(countBrute(dualOf(buildRegion(deriveSides(Family::F2, 2, 3, 1)))), 16);
}

TEST(Region, RejectsUnconstructibleSpecs) {
  EXPECT_THROW(buildRegion(deriveSides(Family::F1, 9, 5, 0)), PreconditionError);
}

TEST(Region, NormalizationIsTranslationInvariant) {
  const Region r = buildRegion(deriveSides(Family::F1, 5, 8, 4));
  std::vector<FaceId> moved = r.faces;
  for (FaceId& f : moved) {
    f.p += 7;
    f.q -= 3;
  }
  EXPECT_EQ(normalizedFaces(moved), normalizedFaces(r.faces));
}

TEST(Region, SvgIsDeterministic) {
  const Region r = buildRegion(deriveSides(Family::F1, 5, 5, 0));
  const std::string a = renderSvg(r);
  EXPECT_EQ(a, renderSvg(buildRegion(deriveSides(Family::F1, 5, 5, 0))));
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  SvgOptions bare;
  bare.drawLabels = false;
  bare.drawContour = false;
  EXPECT_LT(renderSvg(r, bare).size(), a.size());
}

TEST(Region, SvgOfEmptyRegion) {
  Region empty;
  const std::string svg = renderSvg(empty);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Region, Json) {
  const Region r = buildRegion(deriveSides(Family::F1, 1, 1, 0));
  const auto j = regionToJson(r);
  EXPECT_EQ(j["family"], 1);
  EXPECT_EQ(j["faces"].size(), r.faces.size());
  EXPECT_EQ(j["black"], j["white"]);
}
