#include "dragon/weight_poly.hpp"

#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace dragon {

WeightPoly WeightPoly::constant(const BigInt& c) { return monomial(0, c); }

WeightPoly WeightPoly::monomial(int exponent, const BigInt& coefficient) {
  WeightPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
  return p;
}

WeightPoly WeightPoly::binomialPower(int k, const BigInt& c, unsigned n) {
  // (x^k + c)^n = sum_j C(n, j) c^(n-j) x^(k j)
  WeightPoly p;
  BigInt binom = 1;
  std::vector<BigInt> cpow(n + 1);
  cpow[0] = 1;
  for (unsigned j = 1; j <= n; ++j) cpow[j] = cpow[j - 1] * c;
  for (unsigned j = 0; j <= n; ++j) {
    BigInt term = binom * cpow[n - j];
    if (term != 0) p.terms_[static_cast<int>(k * j)] += term;
    binom = binom * (n - j) / (j + 1);
  }
  return p;
}

BigInt WeightPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

WeightPoly WeightPoly::operator+(const WeightPoly& o) const {
  WeightPoly r = *this;
  r += o;
  return r;
}

WeightPoly& WeightPoly::shift(int by) {
  if (by == 0) return *this;
  std::map<int, BigInt> moved;
  for (auto& [e, c] : terms_) moved.emplace_hint(moved.end(), e + by, std::move(c));
  terms_ = std::move(moved);
  return *this;
}

WeightPoly WeightPoly::operator*(const WeightPoly& o) const {
  if (isZero() || o.isZero()) return {};
  const int lo = terms_.begin()->first + o.terms_.begin()->first;
  const int hi = terms_.rbegin()->first + o.terms_.rbegin()->first;
  std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      mpz_addmul(acc[static_cast<std::size_t>(e1 + e2 - lo)].get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    }
  }
  WeightPoly r;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) r.terms_.emplace_hint(r.terms_.end(), static_cast<int>(i) + lo, std::move(acc[i]));
  }
  return r;
}

BigInt WeightPoly::evaluateAtOne() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string WeightPoly::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += toDecimal(mag);
      continue;
    }
    if (mag != 1) out += toDecimal(mag);
    out += "x";
    if (e != 1) out += fmt::format("^{}", e);
  }
  return out;
}

}  // namespace dragon
