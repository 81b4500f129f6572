#include "dragon/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dragon/formulas.hpp"
#include "dragon/region.hpp"

namespace dragon {

CountResult countRegion(const ContourSpec& spec, Counter counter, std::size_t crossCheckLimit) {
  CountResult r;
  r.spec = spec;
  const DualGraph g = dualOf(buildRegion(spec));
  r.vertices = g.size();
  r.count = countMatchings(g, counter);
  if (counter == Counter::Kasteleyn && g.size() <= crossCheckLimit) r.crossCheck = countBrute(g);
  r.formula = spec.family == Family::F1 ? phi(spec.a, spec.b, spec.c) : psi(spec.a, spec.b, spec.c);
  if (r.count >= 1) {
    try {
      r.factors = factorize23(r.count);
    } catch (const ResidualFactor&) {
    }
  }
  r.agrees = r.count == r.formula && (!r.crossCheck || *r.crossCheck == r.count);
  return r;
}

nlohmann::json countResultToJson(const CountResult& r) {
  nlohmann::json j{{"family", familyIndex(r.spec.family)},
                   {"a", r.spec.a},
                   {"b", r.spec.b},
                   {"c", r.spec.c},
                   {"perimeter", perimeter(r.spec)},
                   {"vertices", r.vertices},
                   {"count", toDecimal(r.count)},
                   {"formula", toDecimal(r.formula)},
                   {"agrees", r.agrees}};
  if (r.factors) {
    j["alpha"] = r.factors->first;
    j["beta"] = r.factors->second;
  } else {
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
  }
  if (r.crossCheck) j["brute"] = toDecimal(*r.crossCheck);
  return j;
}

SweepReport runSweep(const SweepOptions& options) {
  std::vector<ContourSpec> specs;
  for (Family f : options.families) {
    auto more = enumerateValid(f, options.maxPerimeter);
    specs.insert(specs.end(), more.begin(), more.end());
  }
  std::ranges::sort(specs, [](const ContourSpec& x, const ContourSpec& y) {
    return std::tuple(perimeter(x), familyIndex(x.family), x.a, x.b, x.c) <
           std::tuple(perimeter(y), familyIndex(y.family), y.a, y.b, y.c);
  });

  SweepReport report;
  report.entries.resize(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < specs.size(); k = next++) {
      report.entries[k] = countRegion(specs[k], options.counter, options.crossCheckLimit);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  report.failures = static_cast<std::size_t>(
      std::ranges::count_if(report.entries, [](const CountResult& r) { return !r.agrees || !r.factors; }));
  report.census = baseCaseCensus();
  return report;
}

nlohmann::json sweepToJson(const SweepReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) entries.push_back(countResultToJson(e));
  return {{"census", {{"family1", report.census.family1}, {"family2", report.census.family2}}},
          {"entries", std::move(entries)},
          {"summary", {{"failures", report.failures}, {"total", report.entries.size()}}}};
}

std::vector<ContourSpec> baseCases(Family family) {
  // Each condition bounds a, b, c by 9, so 40 leaves ample room.
  constexpr int kBound = 40;
  const int smallB = family == Family::F1 ? 4 : 3;
  std::vector<ContourSpec> out;
  for (int a = 0; a <= kBound; ++a) {
    for (int b = 0; b <= kBound; ++b) {
      for (int c = 0; c <= kBound; ++c) {
        const ContourSpec s = deriveSides(family, a, b, c);
        if (!isValid(s)) continue;
        if (perimeter(s) <= 15 || b <= smallB || c + s.d <= 2) out.push_back(s);
      }
    }
  }
  std::ranges::sort(out, [](const ContourSpec& x, const ContourSpec& y) {
    return std::tuple(perimeter(x), x.a, x.b, x.c) < std::tuple(perimeter(y), y.a, y.b, y.c);
  });
  return out;
}

Census baseCaseCensus() {
  return {static_cast<int>(baseCases(Family::F1).size()), static_cast<int>(baseCases(Family::F2).size())};
}

}  // namespace dragon
