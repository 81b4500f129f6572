#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dragon/bigint.hpp"
#include "dragon/contour.hpp"
#include "dragon/counting.hpp"

namespace dragon {

struct CountResult {
  ContourSpec spec;
  std::size_t vertices = 0;
  BigInt count;
  BigInt formula;
  std::optional<std::pair<unsigned long, unsigned long>> factors;  // empty if not 2^x 3^y
  // Brute-force value when a cross-check ran.
  std::optional<BigInt> crossCheck;
  bool agrees = false;
};

// Builds the region, counts its tilings and compares with the closed form.
// crossCheckLimit: also run the brute-force counter when the main counter is
// Kasteleyn and the graph has at most this many vertices.
CountResult countRegion(const ContourSpec& spec, Counter counter, std::size_t crossCheckLimit = 40);

nlohmann::json countResultToJson(const CountResult& r);

struct SweepOptions {
  int maxPerimeter = 15;
  std::vector<Family> families{Family::F1, Family::F2};
  Counter counter = Counter::Brute;
  std::size_t crossCheckLimit = 0;
  unsigned jobs = 1;
};

struct Census {
  int family1 = 0;
  int family2 = 0;
};

struct SweepReport {
  std::vector<CountResult> entries;  // by (perimeter, family, a, b, c)
  std::size_t failures = 0;
  Census census;
};

SweepReport runSweep(const SweepOptions& options);

nlohmann::json sweepToJson(const SweepReport& report);

// Base cases of the induction: family 1 triples with perimeter <= 15, or
// b <= 4, or c + d <= 2; family 2 triples with perimeter <= 15, or b <= 3,
// or c + d <= 2. Only triples passing isValid are listed.
std::vector<ContourSpec> baseCases(Family family);
Census baseCaseCensus();

}  // namespace dragon
