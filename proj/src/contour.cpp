#include "dragon/contour.hpp"

#include <algorithm>
#include <cstdlib>
#include <fmt/format.h>
#include <tuple>

namespace dragon {

char sideLetter(Side s) { return static_cast<char>('a' + static_cast<int>(s)); }

int familyIndex(Family f) { return static_cast<int>(f); }

Family familyFromIndex(int index) {
  if (index == 1) return Family::F1;
  if (index == 2) return Family::F2;
  throw std::invalid_argument(fmt::format("family must be 1 or 2, got {}", index));
}

int ContourSpec::sideLength(Side s) const {
  switch (s) {
    case Side::A: return a;
    case Side::B: return b;
    case Side::C: return c;
    case Side::D: return d;
    case Side::E: return e;
    case Side::F: return fLen;
  }
  return 0;
}

std::string ContourSpec::label() const {
  return fmt::format("DR{}({},{},{})", familyIndex(family), a, b, c);
}

ContourSpec deriveSides(Family family, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) {
    throw PreconditionError(fmt::format("side lengths must be non-negative: ({},{},{})", a, b, c));
  }
  const int shift = family == Family::F1 ? 1 : -1;
  ContourSpec s;
  s.family = family;
  s.a = a;
  s.b = b;
  s.c = c;
  s.d = 2 * b - a - 2 * c + shift;
  s.e = 3 * b - 2 * a - 2 * c + shift;
  s.fSigned = c + s.d - a;
  s.fLen = std::abs(s.fSigned);
  return s;
}

bool isConstructible(const ContourSpec& s) {
  return s.a >= 0 && s.b >= 1 && s.c >= 0 && s.d >= 0 && s.e >= 0;
}

bool isValid(const ContourSpec& s) { return isConstructible(s) && s.b >= 2; }

int perimeter(const ContourSpec& s) { return s.a + s.b + s.c + s.d + s.e + s.fLen; }

LatticePoint sideDirection(const ContourSpec& spec, Side s) {
  switch (s) {
    case Side::A: return {-1, 0};
    case Side::B: return {1, -1};
    case Side::C: return {0, 1};
    case Side::D: return {1, 0};
    case Side::E: return {-1, 1};
    case Side::F: return {0, spec.fSigned >= 0 ? -1 : 1};
  }
  return {0, 0};
}

std::array<LatticePoint, 7> traceContour(const ContourSpec& spec) {
  std::array<LatticePoint, 7> pts{};
  pts[0] = {0, 0};
  for (std::size_t i = 0; i < kAllSides.size(); ++i) {
    const Side s = kAllSides[i];
    pts[i + 1] = pts[i] + sideDirection(spec, s) * spec.sideLength(s);
  }
  return pts;
}

ContourSpec flipOverB(const ContourSpec& spec) {
  if (spec.fSigned < 0) {
    throw PreconditionError(fmt::format("flip over the b side needs a <= c + d; {} has a > c + d",
                                        spec.label()));
  }
  return deriveSides(spec.family, spec.fLen, spec.e, spec.d);
}

ContourSpec flipHorizontal(const ContourSpec& spec) {
  if (spec.fSigned >= 0) {
    throw PreconditionError(fmt::format("horizontal flip needs a > c + d; {} has a <= c + d",
                                        spec.label()));
  }
  if (spec.family == Family::F1) {
    return deriveSides(Family::F2, spec.b, spec.a, 2 * spec.a - 2 * spec.b + spec.c - 1);
  }
  return deriveSides(Family::F1, spec.b, spec.a, 2 * spec.a - 2 * spec.b + spec.c + 1);
}

std::vector<ContourSpec> enumerateValid(Family family, int maxPerimeter) {
  std::vector<ContourSpec> out;
  // Every side is at most half the perimeter.
  const int bound = std::max(0, maxPerimeter / 2);
  for (int a = 0; a <= bound; ++a) {
    for (int b = 2; b <= bound; ++b) {
      for (int c = 0; c <= bound; ++c) {
        auto s = deriveSides(family, a, b, c);
        if (isValid(s) && perimeter(s) <= maxPerimeter) out.push_back(s);
      }
    }
  }
  std::ranges::sort(out, [](const ContourSpec& x, const ContourSpec& y) {
    return std::tuple(perimeter(x), x.a, x.b, x.c) < std::tuple(perimeter(y), y.a, y.b, y.c);
  });
  return out;
}

}  // namespace dragon
