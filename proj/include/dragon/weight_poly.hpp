#pragma once

#include <map>
#include <string>

#include "dragon/bigint.hpp"

namespace dragon {

// Laurent polynomial in one indeterminate x with arbitrary-precision integer
// coefficients. Zero coefficients are never stored.
class WeightPoly {
 public:
  WeightPoly() = default;

  static WeightPoly constant(const BigInt& c);
  static WeightPoly monomial(int exponent, const BigInt& coefficient = 1);
  // (x^k + c)^n expanded by the binomial theorem; n >= 0.
  static WeightPoly binomialPower(int k, const BigInt& c, unsigned n);

  bool isZero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int exponent) const;

  WeightPoly& operator+=(const WeightPoly& o);
  WeightPoly& shift(int by);  // multiply by x^by
  WeightPoly operator*(const WeightPoly& o) const;
  WeightPoly operator+(const WeightPoly& o) const;

  BigInt evaluateAtOne() const;

  bool operator==(const WeightPoly& o) const = default;

  // Highest power first, e.g. "x^4 + 2x^2 + 1".
  std::string toString() const;

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace dragon
