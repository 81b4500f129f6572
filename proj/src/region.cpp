#include "dragon/region.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>

#include <fmt/format.h>

namespace dragon {

namespace {

enum class Placement { Outside, Boundary, Inside };

struct Polygon {
  std::vector<SixthPoint> vertices;  // closed: front() == back()
};

Polygon contourPolygon(const ContourSpec& spec) {
  Polygon poly;
  for (const auto& pt : traceContour(spec)) poly.vertices.push_back({6LL * pt.p, 6LL * pt.q});
  return poly;
}

std::int64_t cross(SixthPoint o, SixthPoint a, SixthPoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool onSegment(SixthPoint a, SixthPoint b, SixthPoint x) {
  if (cross(a, b, x) != 0) return false;
  return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= x.y &&
         x.y <= std::max(a.y, b.y);
}

// Exact classification by winding number. The (v2, v1) basis is an
// orientation-preserving affine image of the plane, so insideness carries over.
Placement classify(const Polygon& poly, SixthPoint x) {
  int winding = 0;
  for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
    const SixthPoint a = poly.vertices[i];
    const SixthPoint b = poly.vertices[i + 1];
    if (onSegment(a, b, x)) return Placement::Boundary;
    if (a.y <= x.y) {
      if (b.y > x.y && cross(a, b, x) > 0) ++winding;
    } else if (b.y <= x.y && cross(a, b, x) < 0) {
      --winding;
    }
  }
  return winding != 0 ? Placement::Inside : Placement::Outside;
}

struct Box {
  int pmin = std::numeric_limits<int>::max();
  int pmax = std::numeric_limits<int>::min();
  int qmin = std::numeric_limits<int>::max();
  int qmax = std::numeric_limits<int>::min();
};

Box contourBox(const ContourSpec& spec) {
  Box box;
  for (const auto& pt : traceContour(spec)) {
    box.pmin = std::min(box.pmin, pt.p);
    box.pmax = std::max(box.pmax, pt.p);
    box.qmin = std::min(box.qmin, pt.q);
    box.qmax = std::max(box.qmax, pt.q);
  }
  --box.pmin;
  --box.qmin;
  ++box.pmax;
  ++box.qmax;
  return box;
}

struct SideTrace {
  std::vector<LatticePoint> points;  // closed segment, endpoints included
  std::vector<FaceId> squares;       // one per unit step
};

std::map<Side, SideTrace> traceSides(const ContourSpec& spec) {
  std::map<Side, SideTrace> out;
  LatticePoint at{0, 0};
  for (Side s : kAllSides) {
    const LatticePoint dir = sideDirection(spec, s);
    SideTrace& tr = out[s];
    tr.points.push_back(at);
    for (int k = 0; k < spec.sideLength(s); ++k) {
      const LatticePoint next = at + dir;
      tr.squares.push_back(*squareBetween(at, next));
      tr.points.push_back(next);
      at = next;
    }
  }
  return out;
}

}  // namespace

std::vector<FaceId> selectRawRegion(const ContourSpec& spec) {
  if (!isConstructible(spec)) {
    throw PreconditionError(fmt::format("{} has no contour (d={}, e={})", spec.label(), spec.d, spec.e));
  }
  const Polygon poly = contourPolygon(spec);
  const Box box = contourBox(spec);
  std::vector<FaceId> faces;
  for (int p = box.pmin; p <= box.pmax; ++p) {
    for (int q = box.qmin; q <= box.qmax; ++q) {
      for (auto kind : {FaceKind::Hex, FaceKind::SquareE, FaceKind::SquareNE, FaceKind::SquareNW,
                        FaceKind::TriUp, FaceKind::TriDown}) {
        const FaceId f{kind, p, q};
        const Placement where = classify(poly, latticeCentroid(f));
        // Hexagon and square centroids on the contour still have their
        // interiors cut by it; triangle centroids never lie on a lattice line.
        if (where != Placement::Outside) faces.push_back(f);
      }
    }
  }
  std::ranges::sort(faces);
  return faces;
}

std::vector<Side> designatedSides(const ContourSpec& spec) {
  const bool oBelowS = spec.fSigned < 0;  // a > c + d
  if (spec.family == Family::F1) {
    if (oBelowS) return {Side::B, Side::E, Side::F};
    return {Side::B, Side::E};
  }
  if (oBelowS) return {Side::A, Side::C, Side::D};
  return {Side::A, Side::C, Side::D, Side::F};
}

Region buildRegion(const ContourSpec& spec) {
  const std::vector<FaceId> raw = selectRawRegion(spec);
  std::set<FaceId> faces(raw.begin(), raw.end());
  const auto sides = traceSides(spec);

  Region region;
  region.spec = spec;
  std::set<FaceId> removed;
  for (const auto& [side, tr] : sides) {
    for (const auto& sq : tr.squares) {
      region.removedBySide[side].push_back(sq);
      removed.insert(sq);
    }
  }
  for (Side side : designatedSides(spec)) {
    const SideTrace& tr = sides.at(side);
    auto& prov = region.removedBySide[side];
    for (const auto& pt : tr.points) {
      const FaceId hex{FaceKind::Hex, pt.p, pt.q};
      prov.push_back(hex);
      removed.insert(hex);
    }
    for (const auto& sq : tr.squares) {
      for (const auto& nb : faceNeighbors(sq)) {
        if (isTriangle(nb.kind) && faces.contains(nb)) {
          prov.push_back(nb);
          removed.insert(nb);
        }
      }
    }
  }
  for (auto& [side, list] : region.removedBySide) {
    std::ranges::sort(list);
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (const auto& f : faces) {
    if (!removed.contains(f)) region.faces.push_back(f);
  }
  std::tie(region.blackCount, region.whiteCount) = balanceReport(region.faces);
  if (region.blackCount != region.whiteCount) {
    throw UnbalancedConstruction(fmt::format("{}: {} black vs {} white faces", spec.label(),
                                             region.blackCount, region.whiteCount));
  }
  return region;
}

std::pair<int, int> balanceReport(const std::vector<FaceId>& faces) {
  int black = 0;
  int white = 0;
  for (const auto& f : faces) {
    if (faceColor(f) == Color::Black) {
      ++black;
    } else {
      ++white;
    }
  }
  return {black, white};
}

std::string renderSvg(const Region& region, const SvgOptions& opt) {
  const auto contour = traceContour(region.spec);
  double xmin = std::numeric_limits<double>::max();
  double ymin = xmin;
  double xmax = std::numeric_limits<double>::lowest();
  double ymax = xmax;
  auto grow = [&](Point2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const auto& pt : contour) grow(toCartesian(pt));
  for (const auto& f : region.faces) {
    for (const auto& p : facePolygon(f)) grow(p);
  }
  xmin -= opt.margin;
  ymin -= opt.margin;
  xmax += opt.margin;
  ymax += opt.margin;
  const double width = (xmax - xmin) * opt.scale;
  const double height = (ymax - ymin) * opt.scale;
  auto X = [&](double x) { return (x - xmin) * opt.scale; };
  auto Y = [&](double y) { return (ymax - y) * opt.scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.3f}\" height=\"{:.3f}\" "
      "viewBox=\"0 0 {:.3f} {:.3f}\">\n",
      width, height, width, height);
  out += fmt::format("<title>{}</title>\n", region.spec.label());
  out += fmt::format("<g stroke=\"{}\" stroke-width=\"{:.3f}\">\n", opt.stroke, opt.scale * 0.01);
  for (const auto& f : region.faces) {
    std::string pts;
    for (const auto& p : facePolygon(f)) pts += fmt::format("{:.3f},{:.3f} ", X(p.x), Y(p.y));
    if (!pts.empty()) pts.pop_back();
    const auto& fill = faceColor(f) == Color::Black ? opt.squareFill : opt.lightFill;
    out += fmt::format("<polygon points=\"{}\" fill=\"{}\"/>\n", pts, fill);
  }
  out += "</g>\n";
  if (opt.drawContour) {
    std::string pts;
    for (const auto& pt : contour) {
      const Point2 c = toCartesian(pt);
      pts += fmt::format("{:.3f},{:.3f} ", X(c.x), Y(c.y));
    }
    pts.pop_back();
    out += fmt::format(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"{:.3f}\" "
        "stroke-dasharray=\"{:.3f},{:.3f}\"/>\n",
        pts, opt.scale * 0.04, opt.scale * 0.12, opt.scale * 0.08);
  }
  if (opt.drawLabels) {
    for (std::size_t i = 0; i < kAllSides.size(); ++i) {
      const Side s = kAllSides[i];
      const Point2 p0 = toCartesian(contour[i]);
      const Point2 p1 = toCartesian(contour[i + 1]);
      // Label sits just outside the contour; the walk is counterclockwise.
      double nx = p1.y - p0.y;
      double ny = p0.x - p1.x;
      const double len = std::max(1e-9, std::hypot(nx, ny));
      nx /= len;
      ny /= len;
      const double mx = (p0.x + p1.x) / 2.0 + 0.6 * nx;
      const double my = (p0.y + p1.y) / 2.0 + 0.6 * ny;
      out += fmt::format(
          "<text x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"serif\" font-style=\"italic\" "
          "font-size=\"{:.3f}\" text-anchor=\"middle\">{}={}</text>\n",
          X(mx), Y(my), opt.scale * 0.45, sideLetter(s), region.spec.sideLength(s));
    }
  }
  out += "</svg>\n";
  return out;
}

nlohmann::json regionToJson(const Region& region) {
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : region.faces) {
    faces.push_back({{"kind", std::string(kindName(f.kind))}, {"p", f.p}, {"q", f.q}});
  }
  return {{"family", familyIndex(region.spec.family)},
          {"a", region.spec.a},
          {"b", region.spec.b},
          {"c", region.spec.c},
          {"faces", faces},
          {"black", region.blackCount},
          {"white", region.whiteCount}};
}

std::vector<FaceId> reflectFaces(const std::vector<FaceId>& faces, Reflection r) {
  std::vector<FaceId> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(reflect(r, f));
  std::ranges::sort(out);
  return out;
}

std::vector<FaceId> normalizedFaces(std::vector<FaceId> faces) {
  if (faces.empty()) return faces;
  int pmin = std::numeric_limits<int>::max();
  int qmin = std::numeric_limits<int>::max();
  for (const auto& f : faces) {
    pmin = std::min(pmin, f.p);
    qmin = std::min(qmin, f.q);
  }
  for (auto& f : faces) {
    f.p -= pmin;
    f.q -= qmin;
  }
  std::ranges::sort(faces);
  return faces;
}

}  // namespace dragon
