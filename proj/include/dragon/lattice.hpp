#pragma once

// The dragon lattice: the 3.4.6.4 dissection of the plane into regular
// hexagons, squares and equilateral triangles.
//
// Hexagon centers form a triangular lattice with unit spacing. A lattice
// point (p, q) sits at p*v2 + q*v1 where v1 = (0, 1) points north and
// v2 = (sqrt(3)/2, 1/2) points northeast. Every other face is addressed
// relative to the hexagon centers around it:
//
//   SquareE(p,q)   between Hex(p,q) and Hex(p+1,q)
//   SquareNE(p,q)  between Hex(p,q) and Hex(p,q+1)
//   SquareNW(p,q)  between Hex(p,q) and Hex(p-1,q+1)
//   TriUp(p,q)     inside the unit triangle (p,q),(p+1,q),(p,q+1)
//   TriDown(p,q)   inside the unit triangle (p+1,q),(p,q+1),(p+1,q+1)

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dragon {

enum class FaceKind : std::uint8_t { Hex, SquareE, SquareNE, SquareNW, TriUp, TriDown };

enum class Color : std::uint8_t { Black, White };

struct FaceId {
  FaceKind kind = FaceKind::Hex;
  int p = 0;
  int q = 0;

  auto operator<=>(const FaceId&) const = default;
};

struct FaceIdHash {
  std::size_t operator()(const FaceId& f) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(f.kind);
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint32_t>(f.p);
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint32_t>(f.q);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// A hexagon center, in units of (v2, v1).
struct LatticePoint {
  int p = 0;
  int q = 0;

  auto operator<=>(const LatticePoint&) const = default;
  LatticePoint operator+(LatticePoint o) const { return {p + o.p, q + o.q}; }
  LatticePoint operator-(LatticePoint o) const { return {p - o.p, q - o.q}; }
  LatticePoint operator*(int k) const { return {p * k, q * k}; }
};

// A point of the plane with coordinates in the (v2, v1) basis, stored as
// sixths. Every face centroid is exact in this representation: hexagons at
// multiples of 6, squares at odd multiples of 3, triangles at 2 or 4 mod 6.
struct SixthPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const SixthPoint&) const = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

std::string_view kindName(FaceKind kind);
std::optional<FaceKind> parseKind(std::string_view name);

bool isSquare(FaceKind kind);
bool isTriangle(FaceKind kind);

Color faceColor(const FaceId& f);

// Edge-sharing faces in counterclockwise order.
std::vector<FaceId> faceNeighbors(const FaceId& f);

// Exact centroid in the (v2, v1) basis.
SixthPoint latticeCentroid(const FaceId& f);

// Inverse of latticeCentroid; nullopt when the point is not a face centroid.
std::optional<FaceId> faceAtCentroid(SixthPoint c);

// Cartesian centroid.
Point2 faceCentroid(const FaceId& f);

// Cartesian polygon, counterclockwise.
std::vector<Point2> facePolygon(const FaceId& f);

// Side length of every polygon when hexagon centers are one unit apart.
double latticeEdgeLength();

Point2 toCartesian(SixthPoint c);
Point2 toCartesian(LatticePoint pt);

// Lattice symmetries acting on (v2, v1) coordinates. Each is an involution
// fixing the origin and mapping the lattice onto itself.
enum class Reflection : std::uint8_t {
  AcrossSouthEastLine,  // mirror line along v2 - v1
  AcrossHorizontal,     // mirror line along the x axis
  AcrossVertical,       // mirror line along v1
};

LatticePoint reflect(Reflection r, LatticePoint pt);
SixthPoint reflect(Reflection r, SixthPoint pt);
FaceId reflect(Reflection r, const FaceId& f);

// The unit triangle with the given three lattice vertices, in any order.
std::optional<FaceId> triangleWithVertices(LatticePoint a, LatticePoint b, LatticePoint c);

// The square sitting on the unit segment between two adjacent hexagon centers.
std::optional<FaceId> squareBetween(LatticePoint a, LatticePoint b);

}  // namespace dragon
