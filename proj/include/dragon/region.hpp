#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dragon/contour.hpp"
#include "dragon/lattice.hpp"

namespace dragon {

struct Region {
  ContourSpec spec;
  std::vector<FaceId> faces;  // sorted by (kind, p, q)
  std::map<Side, std::vector<FaceId>> removedBySide;
  int blackCount = 0;
  int whiteCount = 0;
};

class UnbalancedConstruction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Every face whose interior meets the closed contour region.
std::vector<FaceId> selectRawRegion(const ContourSpec& spec);

// Raw region minus the boundary squares, and minus the boundary hexagons and
// the triangles behind boundary squares on the family's designated sides.
Region buildRegion(const ContourSpec& spec);

// Sides whose boundary hexagons and triangles are removed.
std::vector<Side> designatedSides(const ContourSpec& spec);

std::pair<int, int> balanceReport(const std::vector<FaceId>& faces);

struct SvgOptions {
  double scale = 40.0;
  double margin = 1.0;
  bool drawContour = true;
  bool drawLabels = true;
  std::string squareFill = "#3a3a3a";
  std::string lightFill = "#e8e8e8";
  std::string stroke = "#000000";
};

std::string renderSvg(const Region& region, const SvgOptions& options = {});

// {family, a, b, c, faces:[{kind,p,q}], black, white}
nlohmann::json regionToJson(const Region& region);

// Faces mapped by a lattice reflection, then translated so that the
// lexicographically smallest hexagon-lattice anchor lands on the origin.
// Two face sets are congruent under r iff their normalized images agree.
std::vector<FaceId> normalizedFaces(std::vector<FaceId> faces);
std::vector<FaceId> reflectFaces(const std::vector<FaceId>& faces, Reflection r);

}  // namespace dragon
