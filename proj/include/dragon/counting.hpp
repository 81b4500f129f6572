#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "dragon/bigint.hpp"
#include "dragon/dual_graph.hpp"
#include "dragon/weight_poly.hpp"

namespace dragon {

enum class Counter { Brute, Kasteleyn };

std::string counterName(Counter c);

// Number of perfect matchings by an exact profile recursion: forced edges
// are stripped, components are counted separately, and each component is
// swept vertex by vertex with states memoized on the set of already matched
// vertices ahead of the sweep.
BigInt countBrute(const DualGraph& g);

// Number of perfect matchings as |det K|, where K is the black-by-white
// adjacency matrix with Kasteleyn signs derived from the embedding.
BigInt countKasteleyn(const DualGraph& g);

BigInt countMatchings(const DualGraph& g, Counter counter);

// Generating polynomial of perfect matchings, x^(sum of edge exponents).
WeightPoly countWeighted(const DualGraph& g);

class KasteleynSignError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ResidualFactor : public std::domain_error {
 public:
  explicit ResidualFactor(BigInt residual);
  const BigInt& residual() const { return residual_; }

 private:
  BigInt residual_;
};

// n = 2^alpha * 3^beta. Throws ResidualFactor otherwise, std::domain_error
// for n < 1.
std::pair<unsigned long, unsigned long> factorize23(const BigInt& n);

// Determinant of a square integer matrix by fraction-free elimination.
BigInt bareissDeterminant(std::vector<std::vector<BigInt>> m);

}  // namespace dragon
