#include "dragon/suites.hpp"

#include <map>

#include <fmt/format.h>

#include "dragon/condensation.hpp"
#include "dragon/formulas.hpp"
#include "dragon/region.hpp"

namespace dragon {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::string triple(std::int64_t a, std::int64_t b, std::int64_t c) { return fmt::format("({},{},{})", a, b, c); }

}  // namespace

void SuiteResult::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(what);
}

nlohmann::json suiteToJson(const SuiteResult& r) {
  return {{"checks", r.checks},
          {"counterexamples", r.counterexamples},
          {"failures", r.failures},
          {"passed", r.passed()},
          {"suite", r.suite}};
}

std::vector<CorpusGraph> builtinCorpus(int maxPerimeter, int maxRows, int maxCols) {
  std::vector<CorpusGraph> out;
  for (std::size_t n : {4, 6, 8}) out.push_back({fmt::format("C{}", n), cycleGraph(n)});
  for (int r = 2; r <= maxRows; ++r) {
    for (int c = 2; c <= maxCols; ++c) {
      if ((r * c) % 2 == 0) out.push_back({fmt::format("grid{}x{}", r, c), gridGraph(r, c)});
    }
  }
  const ContourSpec aztec1 = deriveSides(Family::F1, 1, 1, 0);
  out.push_back({aztec1.label(), dualOf(buildRegion(aztec1))});
  for (Family f : {Family::F1, Family::F2}) {
    for (const auto& s : enumerateValid(f, maxPerimeter)) out.push_back({s.label(), dualOf(buildRegion(s))});
  }
  return out;
}

SuiteResult kuoSuite(const std::vector<CorpusGraph>& corpus, const std::vector<Counter>& counters) {
  SuiteResult res;
  res.suite = "kuo";
  for (const auto& [name, g] : corpus) {
    const std::vector<FaceWalk> faces = faceWalks(g);
    for (Counter counter : counters) {
      const BigInt whole = countMatchings(g, counter);
      std::map<std::pair<std::size_t, std::size_t>, BigInt> pairCounts;
      auto without = [&](std::set<std::size_t> drop) {
        std::set<VertexLabel> labels;
        for (std::size_t i : drop) labels.insert(g.vertex(i).label);
        return countMatchings(deleteVertices(g, labels), counter);
      };
      auto pairCount = [&](std::size_t x, std::size_t y) -> const BigInt& {
        const auto key = std::minmax(x, y);
        auto it = pairCounts.find(key);
        if (it == pairCounts.end()) it = pairCounts.emplace(key, without({x, y})).first;
        return it->second;
      };
      for (std::size_t f = 0; f < faces.size(); ++f) {
        for (const FourPoint& fp : enumerateFourPoints(g, faces[f])) {
          validateFourPoint(g, faces, fp);
          const BigInt lhs = whole * without({fp.u, fp.v, fp.w, fp.t});
          const BigInt rhs = pairCount(fp.u, fp.v) * pairCount(fp.w, fp.t) +
                             pairCount(fp.t, fp.u) * pairCount(fp.v, fp.w);
          res.record(lhs == rhs, fmt::format("{} face {} ({},{},{},{}) with {}", name, f, fp.u, fp.v, fp.w,
                                             fp.t, counterName(counter)));
        }
      }
    }
  }
  return res;
}

SuiteResult recurrenceSuite(int grid) {
  SuiteResult res;
  res.suite = "recurrences";
  for (RecurrenceId r : kAllRecurrences) {
    const bool mixed = r == RecurrenceId::R3First || r == RecurrenceId::R3Second;
    const std::vector<FormulaPair> pairs =
        mixed ? std::vector{FormulaPair::PhiPsi} : std::vector{FormulaPair::PhiPhi, FormulaPair::PsiPsi};
    for (FormulaPair p : pairs) {
      for (int a = -grid; a <= grid; ++a) {
        for (int b = -grid; b <= grid; ++b) {
          for (int c = -grid; c <= grid; ++c) {
            res.record(checkRecurrence(r, p, a, b, c),
                       fmt::format("{} {} at {}", recurrenceName(r), pairName(p), triple(a, b, c)));
          }
        }
      }
    }
  }
  return res;
}

SuiteResult flipSuite(int grid, int regionMaxPerimeter) {
  SuiteResult res;
  res.suite = "flips";
  for (int a = -grid; a <= grid; ++a) {
    for (int b = -grid; b <= grid; ++b) {
      for (int c = -grid; c <= grid; ++c) {
        const std::string at = triple(a, b, c);
        if (2 * b - 2 * a - c + 1 >= 0) {
          res.record(phiExp(a, b, c) == phiExp(2 * b - 2 * a - c + 1, 3 * b - 2 * a - 2 * c + 1,
                                                2 * b - a - 2 * c + 1),
                     "phi over b at " + at);
        }
        if (2 * b - 2 * a - c - 1 >= 0) {
          res.record(psiExp(a, b, c) == psiExp(2 * b - 2 * a - c - 1, 3 * b - 2 * a - 2 * c - 1,
                                                2 * b - a - 2 * c - 1),
                     "psi over b at " + at);
        }
        if (2 * a - 2 * b + c - 1 >= 0) {
          res.record(phiExp(a, b, c) == psiExp(b, a, 2 * a - 2 * b + c - 1), "phi horizontal at " + at);
        }
        if (2 * a - 2 * b + c + 1 >= 0) {
          res.record(psiExp(a, b, c) == phiExp(b, a, 2 * a - 2 * b + c + 1), "psi horizontal at " + at);
        }
      }
    }
  }
  for (Family f : {Family::F1, Family::F2}) {
    for (const auto& s : enumerateValid(f, regionMaxPerimeter)) {
      const bool overB = s.fSigned >= 0;
      const ContourSpec t = overB ? flipOverB(s) : flipHorizontal(s);
      const Reflection r = overB ? Reflection::AcrossSouthEastLine : Reflection::AcrossHorizontal;
      res.record(isConstructible(t), s.label() + " flips to a missing region " + t.label());
      const Region rs = buildRegion(s);
      const Region rt = buildRegion(t);
      res.record(normalizedFaces(reflectFaces(rs.faces, r)) == normalizedFaces(rt.faces),
                 s.label() + " is not congruent to " + t.label());
      res.record(countBrute(dualOf(rs)) == countBrute(dualOf(rt)),
                 s.label() + " and " + t.label() + " have different counts");
    }
  }
  return res;
}

SuiteResult weightedSuite(int grid, int regionMaxPerimeter, const std::vector<CorpusGraph>& corpus) {
  SuiteResult res;
  res.suite = "weighted";
  for (int a = 0; a <= grid; ++a) {
    for (int b = 2; b <= grid; ++b) {
      for (int c = 0; c <= grid; ++c) {
        if (isValid(deriveSides(Family::F1, a, b, c))) {
          res.record(weightedFormula(FormulaId::W1, a, b, c).evaluateAtOne() == phi(a, b, c),
                     "w1(1) != phi at " + triple(a, b, c));
        }
        if (isValid(deriveSides(Family::F2, a, b, c))) {
          res.record(weightedFormula(FormulaId::W2, a, b, c).evaluateAtOne() == psi(a, b, c),
                     "w2(1) != psi at " + triple(a, b, c));
        }
      }
    }
  }
  for (Family f : {Family::F1, Family::F2}) {
    const FormulaId which = f == Family::F1 ? FormulaId::W1 : FormulaId::W2;
    for (const auto& s : enumerateValid(f, regionMaxPerimeter)) {
      res.record(countWeighted(weightedDualOf(buildRegion(s))) == weightedFormula(which, s.a, s.b, s.c),
                 "weighted count of " + s.label());
    }
  }
  for (const auto& [name, g] : corpus) {
    // Deterministic mixed weights so that x = 1 has to collapse real terms.
    const DualGraph h = g.withWeights([](std::size_t u, std::size_t v) { return static_cast<int>((u + 2 * v) % 3); });
    res.record(countWeighted(h).evaluateAtOne() == countBrute(g), "weighted corpus graph " + name);
  }
  return res;
}

SuiteResult lemmaSuite(std::size_t perVariant, int maxOperandPerimeter, Counter counter) {
  SuiteResult res;
  res.suite = "lemmas";
  for (LemmaVariant v : kAllLemmaVariants) {
    const auto triples = lemmaTriples(v, perVariant, maxOperandPerimeter);
    res.record(triples.size() >= perVariant,
               fmt::format("{} has only {} triples in range", lemmaName(v), triples.size()));
    for (const auto& [a, b, c] : triples) {
      res.record(lemmaIdentity(v, a, b, c, counter).holds, fmt::format("{} at {}", lemmaName(v), triple(a, b, c)));
    }
  }
  return res;
}

}  // namespace dragon
