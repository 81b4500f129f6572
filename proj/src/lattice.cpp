#include "dragon/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dragon {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

std::int64_t floorMod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::int64_t floorDiv(std::int64_t v, std::int64_t m) { return (v - floorMod(v, m)) / m; }

}  // namespace

std::string_view kindName(FaceKind kind) {
  switch (kind) {
    case FaceKind::Hex: return "Hex";
    case FaceKind::SquareE: return "SquareE";
    case FaceKind::SquareNE: return "SquareNE";
    case FaceKind::SquareNW: return "SquareNW";
    case FaceKind::TriUp: return "TriUp";
    case FaceKind::TriDown: return "TriDown";
  }
  return "?";
}

std::optional<FaceKind> parseKind(std::string_view name) {
  for (auto k : {FaceKind::Hex, FaceKind::SquareE, FaceKind::SquareNE, FaceKind::SquareNW,
                 FaceKind::TriUp, FaceKind::TriDown}) {
    if (kindName(k) == name) return k;
  }
  return std::nullopt;
}

bool isSquare(FaceKind kind) {
  return kind == FaceKind::SquareE || kind == FaceKind::SquareNE || kind == FaceKind::SquareNW;
}

bool isTriangle(FaceKind kind) { return kind == FaceKind::TriUp || kind == FaceKind::TriDown; }

Color faceColor(const FaceId& f) { return isSquare(f.kind) ? Color::Black : Color::White; }

std::vector<FaceId> faceNeighbors(const FaceId& f) {
  const int p = f.p;
  const int q = f.q;
  using K = FaceKind;
  switch (f.kind) {
    case K::Hex:
      return {{K::SquareE, p, q},      {K::SquareNE, p, q},     {K::SquareNW, p, q},
              {K::SquareE, p - 1, q},  {K::SquareNE, p, q - 1}, {K::SquareNW, p + 1, q - 1}};
    case K::SquareE:
      return {{K::Hex, p + 1, q}, {K::TriUp, p, q}, {K::Hex, p, q}, {K::TriDown, p, q - 1}};
    case K::SquareNE:
      return {{K::TriUp, p, q}, {K::Hex, p, q + 1}, {K::TriDown, p - 1, q}, {K::Hex, p, q}};
    case K::SquareNW:
      return {{K::TriDown, p - 1, q}, {K::Hex, p - 1, q + 1}, {K::TriUp, p - 1, q}, {K::Hex, p, q}};
    case K::TriUp:
      return {{K::SquareNW, p + 1, q}, {K::SquareNE, p, q}, {K::SquareE, p, q}};
    case K::TriDown:
      return {{K::SquareNE, p + 1, q}, {K::SquareE, p, q + 1}, {K::SquareNW, p + 1, q}};
  }
  return {};
}

SixthPoint latticeCentroid(const FaceId& f) {
  const std::int64_t x = 6 * static_cast<std::int64_t>(f.p);
  const std::int64_t y = 6 * static_cast<std::int64_t>(f.q);
  switch (f.kind) {
    case FaceKind::Hex: return {x, y};
    case FaceKind::SquareE: return {x + 3, y};
    case FaceKind::SquareNE: return {x, y + 3};
    case FaceKind::SquareNW: return {x - 3, y + 3};
    case FaceKind::TriUp: return {x + 2, y + 2};
    case FaceKind::TriDown: return {x + 4, y + 4};
  }
  return {x, y};
}

std::optional<FaceId> faceAtCentroid(SixthPoint c) {
  const auto rx = floorMod(c.x, 6);
  const auto ry = floorMod(c.y, 6);
  auto make = [&](FaceKind k, std::int64_t dx, std::int64_t dy) {
    return FaceId{k, static_cast<int>(floorDiv(c.x - dx, 6)), static_cast<int>(floorDiv(c.y - dy, 6))};
  };
  if (rx == 0 && ry == 0) return make(FaceKind::Hex, 0, 0);
  if (rx == 3 && ry == 0) return make(FaceKind::SquareE, 3, 0);
  if (rx == 0 && ry == 3) return make(FaceKind::SquareNE, 0, 3);
  if (rx == 3 && ry == 3) return make(FaceKind::SquareNW, -3, 3);
  if (rx == 2 && ry == 2) return make(FaceKind::TriUp, 2, 2);
  if (rx == 4 && ry == 4) return make(FaceKind::TriDown, 4, 4);
  return std::nullopt;
}

Point2 toCartesian(SixthPoint c) {
  const double p = static_cast<double>(c.x) / 6.0;
  const double q = static_cast<double>(c.y) / 6.0;
  return {p * kSqrt3 / 2.0, p / 2.0 + q};
}

Point2 toCartesian(LatticePoint pt) { return toCartesian(SixthPoint{6LL * pt.p, 6LL * pt.q}); }

Point2 faceCentroid(const FaceId& f) { return toCartesian(latticeCentroid(f)); }

double latticeEdgeLength() { return 1.0 / (1.0 + kSqrt3); }

std::vector<Point2> facePolygon(const FaceId& f) {
  const double s = latticeEdgeLength();
  const Point2 c = faceCentroid(f);
  std::vector<Point2> out;
  auto squareOn = [&](LatticePoint a, LatticePoint b) {
    const Point2 pa = toCartesian(a);
    const Point2 pb = toCartesian(b);
    const Point2 u{pb.x - pa.x, pb.y - pa.y};  // unit length already
    const Point2 w{-u.y, u.x};
    const double h = s / 2.0;
    for (auto [su, sw] : {std::pair{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}) {
      out.push_back({c.x + h * (su * u.x + sw * w.x), c.y + h * (su * u.y + sw * w.y)});
    }
  };
  auto triangleOn = [&](std::array<LatticePoint, 3> verts) {
    for (const auto& v : verts) {
      const Point2 pv = toCartesian(v);
      out.push_back({c.x + s * (pv.x - c.x), c.y + s * (pv.y - c.y)});
    }
  };
  const int p = f.p;
  const int q = f.q;
  switch (f.kind) {
    case FaceKind::Hex:
      for (int k = 0; k < 6; ++k) {
        const double t = k * std::numbers::pi / 3.0;
        out.push_back({c.x + s * std::cos(t), c.y + s * std::sin(t)});
      }
      break;
    case FaceKind::SquareE: squareOn({p, q}, {p + 1, q}); break;
    case FaceKind::SquareNE: squareOn({p, q}, {p, q + 1}); break;
    case FaceKind::SquareNW: squareOn({p, q}, {p - 1, q + 1}); break;
    case FaceKind::TriUp: triangleOn({LatticePoint{p, q}, {p + 1, q}, {p, q + 1}}); break;
    case FaceKind::TriDown: triangleOn({LatticePoint{p + 1, q}, {p + 1, q + 1}, {p, q + 1}}); break;
  }
  return out;
}

LatticePoint reflect(Reflection r, LatticePoint pt) {
  switch (r) {
    case Reflection::AcrossSouthEastLine: return {-pt.q, -pt.p};
    case Reflection::AcrossHorizontal: return {pt.p, -pt.p - pt.q};
    case Reflection::AcrossVertical: return {-pt.p, pt.p + pt.q};
  }
  return pt;
}

SixthPoint reflect(Reflection r, SixthPoint pt) {
  switch (r) {
    case Reflection::AcrossSouthEastLine: return {-pt.y, -pt.x};
    case Reflection::AcrossHorizontal: return {pt.x, -pt.x - pt.y};
    case Reflection::AcrossVertical: return {-pt.x, pt.x + pt.y};
  }
  return pt;
}

FaceId reflect(Reflection r, const FaceId& f) {
  // Reflections preserve the lattice, so the image centroid is always a face.
  return *faceAtCentroid(reflect(r, latticeCentroid(f)));
}

std::optional<FaceId> triangleWithVertices(LatticePoint a, LatticePoint b, LatticePoint c) {
  const std::int64_t sx = 2LL * (a.p + b.p + c.p);
  const std::int64_t sy = 2LL * (a.q + b.q + c.q);
  auto f = faceAtCentroid({sx, sy});
  if (!f || !isTriangle(f->kind)) return std::nullopt;
  std::array<LatticePoint, 3> want{a, b, c};
  std::array<LatticePoint, 3> have =
      f->kind == FaceKind::TriUp
          ? std::array<LatticePoint, 3>{LatticePoint{f->p, f->q}, {f->p + 1, f->q}, {f->p, f->q + 1}}
          : std::array<LatticePoint, 3>{LatticePoint{f->p + 1, f->q}, {f->p, f->q + 1}, {f->p + 1, f->q + 1}};
  std::ranges::sort(want);
  std::ranges::sort(have);
  if (want != have) return std::nullopt;
  return f;
}

std::optional<FaceId> squareBetween(LatticePoint a, LatticePoint b) {
  const LatticePoint d = b - a;
  const bool unit = (d.p == 0 && (d.q == 1 || d.q == -1)) || (d.q == 0 && (d.p == 1 || d.p == -1)) ||
                    (d.p == 1 && d.q == -1) || (d.p == -1 && d.q == 1);
  if (!unit) return std::nullopt;
  auto f = faceAtCentroid({3LL * (a.p + b.p), 3LL * (a.q + b.q)});
  if (!f || !isSquare(f->kind)) return std::nullopt;
  return f;
}

}  // namespace dragon
