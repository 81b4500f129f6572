#pragma once

#include <string>

#include <gmpxx.h>

namespace dragon {

// Exact matching counts. Never converted to floating point.
using BigInt = mpz_class;

inline std::string toDecimal(const BigInt& v) { return v.get_str(10); }

inline BigInt pow2pow3(unsigned long e2, unsigned long e3) {
  BigInt two;
  BigInt three;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, e2);
  mpz_ui_pow_ui(three.get_mpz_t(), 3, e3);
  return two * three;
}

}  // namespace dragon
