#pragma once

// Six-sided contours on the triangular lattice of hexagon centers.
//
// Starting at S the walk goes a units southwest, b southeast, c north,
// d northeast, e northwest and then vertically back to S. The two region
// families differ only in the constant that balance forces on d:
//
//   family 1:  d = 2b - a - 2c + 1,  e = 3b - 2a - 2c + 1
//   family 2:  d = 2b - a - 2c - 1,  e = 3b - 2a - 2c - 1
//
// and in both a + e = b + d, f = |a - c - d|.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dragon/lattice.hpp"

namespace dragon {

enum class Family : std::uint8_t { F1 = 1, F2 = 2 };

// Contour sides in walk order: SW, SE, N, NE, NW, vertical.
enum class Side : std::uint8_t { A, B, C, D, E, F };

inline constexpr std::array<Side, 6> kAllSides{Side::A, Side::B, Side::C, Side::D, Side::E, Side::F};

char sideLetter(Side s);
int familyIndex(Family f);
Family familyFromIndex(int index);

struct ContourSpec {
  Family family = Family::F1;
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int e = 0;
  int fLen = 0;
  // c + d - a; non-negative when the contour's last vertex O is above S.
  int fSigned = 0;

  bool operator==(const ContourSpec&) const = default;

  int sideLength(Side s) const;
  std::string label() const;
};

class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

ContourSpec deriveSides(Family family, int a, int b, int c);

// Closed-form hypotheses of the tiling theorem: a, b, c >= 0, b >= 2, d >= 0, e >= 0.
bool isValid(const ContourSpec& spec);

// Weaker gate under which the region can be drawn at all: a, b, c >= 0,
// b >= 1, d >= 0, e >= 0. The order-1 Aztec dragon (1,1,0) lives here.
bool isConstructible(const ContourSpec& spec);

// Sum of the six side lengths. Always odd on the valid domain.
int perimeter(const ContourSpec& spec);

// S, P1, ..., P5, S with S at the origin.
std::array<LatticePoint, 7> traceContour(const ContourSpec& spec);

// Unit direction of a side in (v2, v1) coordinates.
LatticePoint sideDirection(const ContourSpec& spec, Side s);

// Reflection across the b side. Requires a <= c + d.
ContourSpec flipOverB(const ContourSpec& spec);

// Reflection across the horizontal line through the western vertex; swaps
// families. Requires a > c + d.
ContourSpec flipHorizontal(const ContourSpec& spec);

// All specs of one family with perimeter <= maxPerimeter passing isValid,
// sorted by (perimeter, a, b, c).
std::vector<ContourSpec> enumerateValid(Family family, int maxPerimeter);

}  // namespace dragon
