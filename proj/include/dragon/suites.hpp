#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dragon/counting.hpp"
#include "dragon/dual_graph.hpp"

namespace dragon {

struct SuiteResult {
  std::string suite;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // the first few failures

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what);
};

nlohmann::json suiteToJson(const SuiteResult& r);

struct CorpusGraph {
  std::string name;
  DualGraph graph;
};

// Even cycles up to 8, balanced grids up to maxRows x maxCols, and the duals
// of all dragon regions up to maxPerimeter (plus the order-1 Aztec dragon).
std::vector<CorpusGraph> builtinCorpus(int maxPerimeter = 15, int maxRows = 4, int maxCols = 5);

// Condensation on every four-point of every face of every graph.
SuiteResult kuoSuite(const std::vector<CorpusGraph>& corpus, const std::vector<Counter>& counters);

// Every recurrence for its closed-form pairings on [-grid, grid]^3.
SuiteResult recurrenceSuite(int grid);

// Closed-form flip identities on [-grid, grid]^3, then region congruence and
// equal counts for every valid spec up to regionMaxPerimeter.
SuiteResult flipSuite(int grid, int regionMaxPerimeter);

// Weighted closed forms at x = 1 on [0, grid]^3, weighted region counts
// against the closed forms up to regionMaxPerimeter, and countWeighted at
// x = 1 against countBrute on the corpus.
SuiteResult weightedSuite(int grid, int regionMaxPerimeter, const std::vector<CorpusGraph>& corpus);

// The smallest perVariant in-hypothesis triples of every lemma variant.
SuiteResult lemmaSuite(std::size_t perVariant, int maxOperandPerimeter, Counter counter);

}  // namespace dragon
