// dragon-count: build dragon regions, count their tilings and check the
// closed forms. Exit status 0 when every check passes, 1 when a count and
// a formula disagree, 2 on invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "dragon/condensation.hpp"
#include "dragon/counting.hpp"
#include "dragon/formulas.hpp"
#include "dragon/region.hpp"
#include "dragon/suites.hpp"
#include "dragon/sweep.hpp"

using namespace dragon;

namespace {

constexpr int kPass = 0;
constexpr int kDisagree = 1;
constexpr int kInvalid = 2;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TripleArgs {
  int family = 1;
  int a = 0;
  int b = 0;
  int c = 0;
};

void addTriple(CLI::App* cmd, TripleArgs& t) {
  cmd->add_option("family", t.family, "Region family (1 or 2)")->required()->check(CLI::IsMember({1, 2}));
  cmd->add_option("a", t.a, "Side a")->required();
  cmd->add_option("b", t.b, "Side b")->required();
  cmd->add_option("c", t.c, "Side c")->required();
}

ContourSpec specFrom(const TripleArgs& t) {
  ContourSpec s;
  try {
    s = deriveSides(familyFromIndex(t.family), t.a, t.b, t.c);
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
  if (!isConstructible(s)) {
    throw InvalidInput(fmt::format("{} is not a dragon region (b={}, d={}, e={})", s.label(), s.b, s.d, s.e));
  }
  return s;
}

void writeText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::string readText(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Counter parseCounter(const std::string& name) { return name == "brute" ? Counter::Brute : Counter::Kasteleyn; }

std::string factorText(const CountResult& r) {
  if (!r.factors) return "not of the form 2^x 3^y";
  return fmt::format("2^{} 3^{}", r.factors->first, r.factors->second);
}

int printSuite(const SuiteResult& r, bool json) {
  if (json) {
    std::cout << suiteToJson(r).dump(2) << "\n";
  } else {
    std::cout << fmt::format("{}: {} checks, {} failures\n", r.suite, r.checks, r.failures);
    if (!r.counterexamples.empty()) std::cout << "first counterexample: " << r.counterexamples.front() << "\n";
  }
  return r.passed() ? kPass : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tiling counts for dragon regions on the triangle-square-hexagon lattice"};
  app.require_subcommand(1);
  app.footer(
      "Exit status: 0 all checks pass, 1 mathematical disagreement, 2 invalid input.\n"
      "DRAGON_COUNT_SEED is reserved and currently ignored; every computation is deterministic.");

  // count
  TripleArgs countArgs;
  std::string countCounter = "kasteleyn";
  bool countWeightedFlag = false;
  bool countJson = false;
  std::string countSvg;
  auto* count = app.add_subcommand("count", "Count the tilings of one region and compare with the closed form");
  addTriple(count, countArgs);
  count->add_option("--counter", countCounter, "brute or kasteleyn (kasteleyn cross-checks graphs up to 40 vertices)")
      ->check(CLI::IsMember({"brute", "kasteleyn"}));
  count->add_flag("--weighted", countWeightedFlag, "Also compare the weighted tiling polynomial");
  count->add_flag("--json", countJson, "Print a JSON report");
  count->add_option("--svg", countSvg, "Write an SVG drawing of the region");

  // sweep
  int sweepMax = 15;
  std::string sweepFamilies = "1,2";
  unsigned sweepJobs = 1;
  std::string sweepJsonPath;
  std::string sweepCounter = "brute";
  auto* sweep = app.add_subcommand("sweep", "Count every valid region up to a perimeter");
  sweep->add_option("--max-perimeter", sweepMax, "Largest perimeter (odd, at least 7)");
  sweep->add_option("--families", sweepFamilies, "Comma separated families");
  sweep->add_option("--jobs", sweepJobs, "Worker threads");
  sweep->add_option("--json", sweepJsonPath, "Write the report as JSON ('-' for stdout)");
  sweep->add_option("--counter", sweepCounter, "brute or kasteleyn")->check(CLI::IsMember({"brute", "kasteleyn"}));

  // identities
  std::string suiteName = "all";
  int grid = 10;
  int suiteMaxPerimeter = 15;
  bool suiteJson = false;
  auto* identities = app.add_subcommand("identities", "Run an identity suite");
  identities->add_option("--suite", suiteName, "kuo, recurrences, flips, weighted, lemmas or all")
      ->check(CLI::IsMember({"kuo", "recurrences", "flips", "weighted", "lemmas", "all"}));
  identities->add_option("--grid", grid, "Grid radius for closed-form checks");
  identities->add_option("--max-perimeter", suiteMaxPerimeter, "Largest region perimeter in region checks");
  identities->add_flag("--json", suiteJson, "Print JSON");

  // formula
  std::string formulaWhich;
  std::int64_t fa = 0;
  std::int64_t fb = 0;
  std::int64_t fc = 0;
  bool formulaExponents = false;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  formula->add_option("which", formulaWhich, "phi, psi, w1, w2, n1 or n2")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "w1", "w2", "n1", "n2"}));
  formula->add_option("a", fa)->required();
  formula->add_option("b", fb)->required();
  formula->add_option("c", fc)->required();
  formula->add_flag("--exponents", formulaExponents, "Print exponents instead of the value");

  // render
  TripleArgs renderArgs;
  std::string renderOut = "-";
  SvgOptions svg;
  bool noContour = false;
  bool noLabels = false;
  auto* render = app.add_subcommand("render", "Draw a region as SVG");
  addTriple(render, renderArgs);
  render->add_option("-o,--out", renderOut, "Output path ('-' for stdout)");
  render->add_option("--scale", svg.scale, "Pixels per hexagon spacing");
  render->add_flag("--no-contour", noContour, "Omit the contour");
  render->add_flag("--no-labels", noLabels, "Omit side labels");

  // export-graph
  TripleArgs exportArgs;
  std::string exportOut = "-";
  bool exportWeighted = false;
  auto* exportGraph = app.add_subcommand("export-graph", "Write the dual graph in text form");
  addTriple(exportGraph, exportArgs);
  exportGraph->add_option("-o,--out", exportOut, "Output path ('-' for stdout)");
  exportGraph->add_flag("--weighted", exportWeighted, "Use the weighted tile exponents");

  // kuo-check
  std::string kuoFile;
  std::size_t ku = 0;
  std::size_t kv = 0;
  std::size_t kw = 0;
  std::size_t kt = 0;
  std::string kuoCounter = "kasteleyn";
  auto* kuo = app.add_subcommand("kuo-check", "Check the condensation identity on a graph file");
  kuo->add_option("file", kuoFile, "Graph in text form ('-' for stdin)")->required();
  kuo->add_option("u", ku)->required();
  kuo->add_option("v", kv)->required();
  kuo->add_option("w", kw)->required();
  kuo->add_option("t", kt)->required();
  kuo->add_option("--counter", kuoCounter, "brute or kasteleyn")->check(CLI::IsMember({"brute", "kasteleyn"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*count) {
      const ContourSpec spec = specFrom(countArgs);
      const Counter counter = parseCounter(countCounter);
      const CountResult r = countRegion(spec, counter, counter == Counter::Kasteleyn ? 40 : 0);
      bool ok = r.agrees;
      nlohmann::json j = countResultToJson(r);
      if (countWeightedFlag) {
        const WeightPoly got = countWeighted(weightedDualOf(buildRegion(spec)));
        const FormulaId which = spec.family == Family::F1 ? FormulaId::W1 : FormulaId::W2;
        std::optional<WeightPoly> want;
        try {
          want = weightedFormula(which, spec.a, spec.b, spec.c);
        } catch (const std::domain_error&) {
        }
        const bool wok = want && *want == got;
        ok = ok && wok;
        j["weighted"] = {{"count", got.toString()},
                         {"formula", want ? nlohmann::json(want->toString()) : nlohmann::json(nullptr)},
                         {"agrees", wok}};
      }
      if (!countSvg.empty()) writeText(countSvg, renderSvg(buildRegion(spec)));
      if (countJson) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << fmt::format("{}  perimeter {}  vertices {}\n", spec.label(), perimeter(spec), r.vertices);
        std::cout << "count    " << toDecimal(r.count) << "\n";
        std::cout << "factors  " << factorText(r) << "\n";
        std::cout << "formula  " << toDecimal(r.formula) << "\n";
        if (r.crossCheck) std::cout << "brute    " << toDecimal(*r.crossCheck) << "\n";
        if (countWeightedFlag) {
          std::cout << "weighted " << j["weighted"]["count"].get<std::string>() << "\n";
          std::cout << "w-form   "
                    << (j["weighted"]["formula"].is_null() ? "n/a" : j["weighted"]["formula"].get<std::string>())
                    << "\n";
        }
        std::cout << "agrees   " << (ok ? "yes" : "no") << "\n";
      }
      return ok ? kPass : kDisagree;
    }

    if (*sweep) {
      if (sweepMax < 7 || sweepMax % 2 == 0) throw InvalidInput("--max-perimeter must be odd and at least 7");
      SweepOptions opt;
      opt.maxPerimeter = sweepMax;
      opt.counter = parseCounter(sweepCounter);
      opt.jobs = sweepJobs;
      opt.families.clear();
      std::stringstream ss(sweepFamilies);
      for (std::string item; std::getline(ss, item, ',');) {
        if (item != "1" && item != "2") throw InvalidInput("families must be 1 and/or 2");
        opt.families.push_back(familyFromIndex(std::stoi(item)));
      }
      const SweepReport report = runSweep(opt);
      if (!sweepJsonPath.empty()) {
        writeText(sweepJsonPath, sweepToJson(report).dump(2) + "\n");
      }
      if (sweepJsonPath != "-") {
        for (const auto& e : report.entries) {
          std::cout << fmt::format("{:>4} {:<16} {:>24} {:<20} {}\n", perimeter(e.spec), e.spec.label(),
                                   toDecimal(e.count), factorText(e), e.agrees ? "ok" : "MISMATCH");
        }
        std::cout << fmt::format("total {}  failures {}\n", report.entries.size(), report.failures);
        std::cout << fmt::format("base cases: {} family-1 triples, {} family-2 triples\n", report.census.family1,
                                 report.census.family2);
      }
      return report.failures == 0 ? kPass : kDisagree;
    }

    if (*identities) {
      const bool all = suiteName == "all";
      int status = kPass;
      std::vector<CorpusGraph> corpus;
      if (all || suiteName == "kuo" || suiteName == "weighted") corpus = builtinCorpus(suiteMaxPerimeter);
      auto run = [&](const SuiteResult& r) { status = std::max(status, printSuite(r, suiteJson)); };
      if (all || suiteName == "recurrences") run(recurrenceSuite(grid));
      if (all || suiteName == "flips") run(flipSuite(grid, suiteMaxPerimeter));
      if (all || suiteName == "weighted") run(weightedSuite(grid, suiteMaxPerimeter, corpus));
      if (all || suiteName == "lemmas") run(lemmaSuite(20, 60, Counter::Kasteleyn));
      if (all || suiteName == "kuo") run(kuoSuite(corpus, {Counter::Brute, Counter::Kasteleyn}));
      return status;
    }

    if (*formula) {
      const FormulaId which = *parseFormula(formulaWhich);
      switch (which) {
        case FormulaId::Phi:
        case FormulaId::Psi: {
          const Exponents e = which == FormulaId::Phi ? phiExp(fa, fb, fc) : psiExp(fa, fb, fc);
          if (formulaExponents) {
            std::cout << fmt::format("2^{} 3^{}\n", e.two, e.three);
          } else {
            std::cout << toDecimal(valueOf(e)) << "\n";
          }
          break;
        }
        case FormulaId::W1:
        case FormulaId::W2:
          if (formulaExponents) {
            const WeightedShape w = weightedShape(which, fa, fb, fc);
            std::cout << fmt::format("2^{} (x^2+1)^{} (x^2+2)^{} x^{}\n", w.twoExp, w.A, w.B, w.C);
          } else {
            std::cout << weightedFormula(which, fa, fb, fc).toString() << "\n";
          }
          break;
        case FormulaId::N1:
        case FormulaId::N2: {
          const Exponents e = needleExp(which, fa, fb, fc);
          if (formulaExponents) {
            std::cout << fmt::format("2^{} 3^{}\n", e.two, e.three);
          } else {
            std::cout << toDecimal(valueOf(e)) << "\n";
          }
          break;
        }
      }
      return kPass;
    }

    if (*render) {
      svg.drawContour = !noContour;
      svg.drawLabels = !noLabels;
      writeText(renderOut, renderSvg(buildRegion(specFrom(renderArgs)), svg));
      return kPass;
    }

    if (*exportGraph) {
      const Region region = buildRegion(specFrom(exportArgs));
      writeText(exportOut, writeGraphText(exportWeighted ? weightedDualOf(region) : dualOf(region)));
      return kPass;
    }

    if (*kuo) {
      const DualGraph g = readGraphText(readText(kuoFile));
      const IdentityReport r = kuoCheck(g, {ku, kv, kw, kt}, parseCounter(kuoCounter));
      std::cout << reportToJson(r).dump(2) << "\n";
      return r.holds ? kPass : kDisagree;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    // Hypothesis violations and exponents outside a closed form's domain.
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    // Malformed graphs and four-points.
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const EmbeddingInvalid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
