// Acceptance checks, one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run only criterion N

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dragon/condensation.hpp"
#include "dragon/counting.hpp"
#include "dragon/formulas.hpp"
#include "dragon/region.hpp"
#include "dragon/suites.hpp"
#include "dragon/sweep.hpp"
#include "oracles.hpp"

using namespace dragon;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts gathered by criteria 1 and 2 for the factorization check.
std::vector<BigInt> gCounts;

double secondsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome aztecDragons() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  std::vector<std::string> seen;
  for (int n = 1; n <= 3; ++n) {
    const BigInt m = countBrute(dualOf(buildRegion(deriveSides(Family::F1, n, n, 0))));
    gCounts.push_back(m);
    seen.push_back(toDecimal(m));
    const BigInt expected = oracle::powerOf(2, n * (n + 1)).get_num();
    if (m != expected) out.pass = false;
  }
  const double secs = secondsSince(t0);
  if (secs >= 10.0) out.pass = false;
  out.detail = fmt::format("counts {} in {:.2f}s", fmt::join(seen, ", "), secs);
  return out;
}

Outcome mainSweep() {
  const auto t0 = std::chrono::steady_clock::now();
  SweepOptions opt;
  opt.maxPerimeter = 19;
  opt.counter = Counter::Brute;
  const SweepReport rep = runSweep(opt);
  std::size_t mismatches = 0;
  std::size_t expectedEntries = 0;
  for (int fam = 1; fam <= 2; ++fam) {
    for (int a = 0; a <= 19; ++a) {
      for (int b = 2; b <= 19; ++b) {
        for (int c = 0; c <= 19; ++c) {
          if (oracle::sideD(fam, a, b, c) < 0 || oracle::sideE(fam, a, b, c) < 0) continue;
          if (oracle::perimeterOf(fam, a, b, c) <= 19) ++expectedEntries;
        }
      }
    }
  }
  for (const auto& e : rep.entries) {
    gCounts.push_back(e.count);
    const mpq_class want = e.spec.family == Family::F1 ? oracle::phi(e.spec.a, e.spec.b, e.spec.c)
                                                       : oracle::psi(e.spec.a, e.spec.b, e.spec.c);
    if (mpq_class(e.count) != want) ++mismatches;
  }
  Outcome out;
  out.pass = mismatches == 0 && rep.failures == 0 && rep.entries.size() == expectedEntries;
  out.detail = fmt::format("{} regions ({} expected), {} mismatches, {:.2f}s", rep.entries.size(), expectedEntries,
                           mismatches, secondsSince(t0));
  return out;
}

Outcome census() {
  int counts[3] = {0, 0, 0};
  for (int fam = 1; fam <= 2; ++fam) {
    for (int a = 0; a <= 30; ++a) {
      for (int b = 2; b <= 30; ++b) {
        for (int c = 0; c <= 30; ++c) {
          const int d = oracle::sideD(fam, a, b, c);
          if (d < 0 || oracle::sideE(fam, a, b, c) < 0) continue;
          const bool base = oracle::perimeterOf(fam, a, b, c) <= 15 || b <= (fam == 1 ? 4 : 3) || c + d <= 2;
          if (base) ++counts[fam];
        }
      }
    }
  }
  const Census lib = baseCaseCensus();
  Outcome out;
  out.pass = counts[1] == 53 && counts[2] == 28 && lib.family1 == 53 && lib.family2 == 28;
  out.detail = fmt::format("family 1: {}, family 2: {} (library {}/{})", counts[1], counts[2], lib.family1,
                           lib.family2);
  return out;
}

Outcome recurrences() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult lib = recurrenceSuite(10);
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (RecurrenceId r : kAllRecurrences) {
    const bool mixed = r == RecurrenceId::R3First || r == RecurrenceId::R3Second;
    for (int a = -10; a <= 10; ++a) {
      for (int b = -10; b <= 10; ++b) {
        for (int c = -10; c <= 10; ++c) {
          const auto ops = recurrenceOperands(r, a, b, c);
          for (int pass = 0; pass < (mixed ? 1 : 2); ++pass) {
            auto v = [&](const Operand& o) {
              const bool usePhi = mixed ? !o.diamond : pass == 0;
              return usePhi ? oracle::phi(o.a, o.b, o.c) : oracle::psi(o.a, o.b, o.c);
            };
            ++checks;
            if (v(ops[0]) * v(ops[1]) != v(ops[2]) * v(ops[3]) + v(ops[4]) * v(ops[5])) ++failures;
          }
        }
      }
    }
  }
  const double secs = secondsSince(t0);
  Outcome out;
  out.pass = lib.passed() && failures == 0 && secs < 30.0;
  out.detail = fmt::format("{} library checks, {} oracle checks, {} failures, {:.2f}s", lib.checks, checks,
                           lib.failures + failures, secs);
  return out;
}

Outcome kuo() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto corpus = builtinCorpus(15, 4, 5);
  const SuiteResult r = kuoSuite(corpus, {Counter::Brute, Counter::Kasteleyn});
  bool hasC4 = false;
  for (const auto& g : corpus) hasC4 = hasC4 || g.name == "C4";
  Outcome out;
  out.pass = r.passed() && hasC4 && r.checks > 0;
  out.detail = fmt::format("{} graphs, {} four-point checks, {} failures, {:.1f}s", corpus.size(), r.checks,
                           r.failures, secondsSince(t0));
  if (!r.counterexamples.empty()) out.detail += "; first: " + r.counterexamples.front();
  return out;
}

Outcome lemmas() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult r = lemmaSuite(20, 60, Counter::Kasteleyn);
  const IdentityReport l31 = lemmaIdentity(LemmaVariant::L31F1, 7, 6, 2, Counter::Brute);
  const IdentityReport l32 = lemmaIdentity(LemmaVariant::L32bFirst, 4, 4, 0, Counter::Brute);
  // Every operand count must also equal its closed form.
  bool operandsMatch = true;
  const std::array<std::pair<LemmaVariant, const IdentityReport*>, 2> named{
      {{LemmaVariant::L31F1, &l31}, {LemmaVariant::L32bFirst, &l32}}};
  for (const auto& [v, rep] : named) {
    const auto specs = v == LemmaVariant::L31F1 ? lemmaOperands(v, 7, 6, 2) : lemmaOperands(v, 4, 4, 0);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const auto& s = specs[i];
      const mpq_class want = s.family == Family::F1 ? oracle::phi(s.a, s.b, s.c) : oracle::psi(s.a, s.b, s.c);
      if (mpq_class(rep->operandCounts.at(i)) != want) operandsMatch = false;
    }
  }
  const double secs = secondsSince(t0);
  Outcome out;
  out.pass = r.passed() && l31.holds && l32.holds && operandsMatch && secs < 600.0;
  out.detail = fmt::format("{} checks over {} variants, {} failures, named examples {}, {:.1f}s", r.checks,
                           kAllLemmaVariants.size(), r.failures, l31.holds && l32.holds ? "hold" : "fail", secs);
  if (!r.counterexamples.empty()) out.detail += "; first: " + r.counterexamples.front();
  return out;
}

Outcome counterEquivalence() {
  std::size_t graphs = 0;
  std::size_t failures = 0;
  std::vector<CorpusGraph> corpus = builtinCorpus(19, 4, 6);
  for (const auto& [name, g] : corpus) {
    if (g.size() > 40) continue;
    ++graphs;
    const BigInt brute = countBrute(g);
    if (countKasteleyn(g) != brute || oracle::naiveMatchings(g) != brute) ++failures;
  }
  Outcome out;
  out.pass = failures == 0 && graphs > 0;
  out.detail = fmt::format("{} graphs with at most 40 vertices, {} disagreements", graphs, failures);
  return out;
}

Outcome weighted() {
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (int a = 0; a <= 12; ++a) {
    for (int b = 2; b <= 12; ++b) {
      for (int c = 0; c <= 12; ++c) {
        for (int fam = 1; fam <= 2; ++fam) {
          if (oracle::sideD(fam, a, b, c) < 0 || oracle::sideE(fam, a, b, c) < 0) continue;
          const FormulaId w = fam == 1 ? FormulaId::W1 : FormulaId::W2;
          const mpq_class want = fam == 1 ? oracle::phi(a, b, c) : oracle::psi(a, b, c);
          ++checks;
          if (mpq_class(weightedFormula(w, a, b, c).evaluateAtOne()) != want) ++failures;
        }
      }
    }
  }
  const auto corpus = builtinCorpus(15, 4, 5);
  for (const auto& [name, g] : corpus) {
    const DualGraph h = g.withWeights([](std::size_t u, std::size_t v) { return static_cast<int>((3 * u + v) % 4); });
    ++checks;
    if (countWeighted(h).evaluateAtOne() != countBrute(g)) ++failures;
  }
  Outcome out;
  out.pass = failures == 0;
  out.detail = fmt::format("{} checks, {} failures", checks, failures);
  return out;
}

bool pureTwoThree(const BigInt& n) {
  try {
    const auto [two, three] = factorize23(n);
    return pow2pow3(two, three) == n;
  } catch (const std::domain_error&) {
    return false;
  }
}

Outcome powers() {
  if (gCounts.empty()) {
    aztecDragons();
    mainSweep();
  }
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (const BigInt& n : gCounts) {
    ++checks;
    if (!pureTwoThree(n)) ++failures;
  }
  for (int a = 0; a <= 10; ++a) {
    for (int b = 2; b <= 10; ++b) {
      for (int c = 0; c <= 10; ++c) {
        if (2 * b - a - 2 * c < 0 || 3 * b - 2 * a - 2 * c < 0) continue;
        for (FormulaId n : {FormulaId::N1, FormulaId::N2}) {
          ++checks;
          if (!pureTwoThree(needleFormula(n, a, b, c))) ++failures;
        }
      }
    }
  }
  Outcome out;
  out.pass = failures == 0;
  out.detail = fmt::format("{} values factored, {} failures", checks, failures);
  return out;
}

Outcome flips() {
  const SuiteResult lib = flipSuite(12, 15);
  std::size_t checks = 0;
  std::size_t failures = 0;
  for (int a = -12; a <= 12; ++a) {
    for (int b = -12; b <= 12; ++b) {
      for (int c = -12; c <= 12; ++c) {
        if (2 * b - 2 * a - c + 1 >= 0) {
          ++checks;
          if (oracle::phi(a, b, c) != oracle::phi(2 * b - 2 * a - c + 1, 3 * b - 2 * a - 2 * c + 1,
                                                  2 * b - a - 2 * c + 1)) {
            ++failures;
          }
        }
        if (2 * a - 2 * b + c - 1 >= 0) {
          ++checks;
          if (oracle::phi(a, b, c) != oracle::psi(b, a, 2 * a - 2 * b + c - 1)) ++failures;
        }
      }
    }
  }
  Outcome out;
  out.pass = lib.passed() && failures == 0;
  out.detail = fmt::format("{} library checks, {} oracle checks, {} failures", lib.checks, checks,
                           lib.failures + failures);
  if (!lib.counterexamples.empty()) out.detail += "; first: " + lib.counterexamples.front();
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "Aztec dragon counts", aztecDragons},
      {2, "main theorem sweep to perimeter 19", mainSweep},
      {3, "base-case census", census},
      {4, "recurrence grid", recurrences},
      {5, "Kuo condensation fuzz", kuo},
      {6, "lemma identities", lemmas},
      {7, "counter equivalence", counterEquivalence},
      {8, "weighted reductions", weighted},
      {9, "powers of 2 and 3", powers},
      {10, "flip invariants", flips},
  };
  bool allPass = true;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    allPass = allPass && o.pass;
    std::cout << fmt::format("criterion {:>2}: {} - {}: {}", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail)
              << std::endl;
  }
  return allPass ? 0 : 1;
}
