#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dragon/condensation.hpp"
#include "dragon/counting.hpp"
#include "dragon/formulas.hpp"
#include "dragon/region.hpp"
#include "dragon/suites.hpp"
#include "dragon/sweep.hpp"

namespace py = pybind11;
using namespace dragon;

namespace {

py::int_ toPy(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(toDecimal(v))); }

BigInt fromPy(const py::int_& v) { return BigInt(v.attr("__str__")().cast<std::string>()); }

py::object fromJson(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Counter counterOf(const std::string& name) {
  if (name == "brute") return Counter::Brute;
  if (name == "kasteleyn") return Counter::Kasteleyn;
  throw py::value_error("counter must be 'brute' or 'kasteleyn'");
}

ContourSpec constructible(int family, int a, int b, int c) {
  const ContourSpec s = deriveSides(familyFromIndex(family), a, b, c);
  if (!isConstructible(s)) throw py::value_error(s.label() + " has a negative side");
  return s;
}

py::dict sidesDict(const ContourSpec& s) {
  py::dict d;
  d["family"] = familyIndex(s.family);
  d["a"] = s.a;
  d["b"] = s.b;
  d["c"] = s.c;
  d["d"] = s.d;
  d["e"] = s.e;
  d["f"] = s.fLen;
  d["f_signed"] = s.fSigned;
  d["perimeter"] = perimeter(s);
  return d;
}

py::dict polyDict(const WeightPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = toPy(c);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tiling counts of dragon regions";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

  m.def("derive_sides", [](int family, int a, int b, int c) {
    return sidesDict(deriveSides(familyFromIndex(family), a, b, c));
  }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("is_valid", [](int family, int a, int b, int c) {
    return isValid(deriveSides(familyFromIndex(family), a, b, c));
  }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("region_faces", [](int family, int a, int b, int c) {
    std::vector<std::tuple<std::string, int, int>> out;
    for (const FaceId& f : buildRegion(constructible(family, a, b, c)).faces) {
      out.emplace_back(std::string(kindName(f.kind)), f.p, f.q);
    }
    return out;
  }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("render_svg", [](int family, int a, int b, int c, double scale) {
    SvgOptions opt;
    opt.scale = scale;
    return renderSvg(buildRegion(constructible(family, a, b, c)), opt);
  }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("scale") = 40.0);

  m.def("export_graph", [](int family, int a, int b, int c, bool weighted) {
    const Region r = buildRegion(constructible(family, a, b, c));
    return writeGraphText(weighted ? weightedDualOf(r) : dualOf(r));
  }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("weighted") = false);

  m.def("count", [](int family, int a, int b, int c, const std::string& counter) {
    py::dict d = fromJson(countResultToJson(countRegion(constructible(family, a, b, c), counterOf(counter))));
    for (const char* key : {"count", "formula", "brute"}) {
      if (d.contains(key)) d[key] = py::module_::import("builtins").attr("int")(d[key]);
    }
    return d;
  }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("counter") = "kasteleyn");

  m.def("count_graph", [](const std::string& text, const std::string& counter) {
    return toPy(countMatchings(readGraphText(text), counterOf(counter)));
  }, py::arg("text"), py::arg("counter") = "kasteleyn");

  m.def("count_weighted", [](int family, int a, int b, int c) {
    return polyDict(countWeighted(weightedDualOf(buildRegion(constructible(family, a, b, c)))));
  }, py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("kuo_check", [](const std::string& text, std::size_t u, std::size_t v, std::size_t w, std::size_t t,
                        const std::string& counter) {
    return fromJson(reportToJson(kuoCheck(readGraphText(text), {u, v, w, t}, counterOf(counter))));
  }, py::arg("text"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("t"), py::arg("counter") = "kasteleyn");

  m.def("phi", [](std::int64_t a, std::int64_t b, std::int64_t c) { return toPy(phi(a, b, c)); });
  m.def("psi", [](std::int64_t a, std::int64_t b, std::int64_t c) { return toPy(psi(a, b, c)); });

  m.def("formula", [](const std::string& which, std::int64_t a, std::int64_t b, std::int64_t c) -> py::object {
    const auto f = parseFormula(which);
    if (!f) throw py::value_error("unknown formula " + which);
    switch (*f) {
      case FormulaId::Phi: return toPy(phi(a, b, c));
      case FormulaId::Psi: return toPy(psi(a, b, c));
      case FormulaId::W1:
      case FormulaId::W2: return polyDict(weightedFormula(*f, a, b, c));
      case FormulaId::N1:
      case FormulaId::N2: return toPy(needleFormula(*f, a, b, c));
    }
    return py::none();
  }, py::arg("which"), py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("factorize23", [](const py::int_& n) {
    try {
      return factorize23(fromPy(n));
    } catch (const ResidualFactor& e) {
      throw py::value_error("residual factor " + toDecimal(e.residual()));
    }
  });

  m.def("sweep", [](int maxPerimeter, const std::string& counter, unsigned jobs) {
    SweepOptions opt;
    opt.maxPerimeter = maxPerimeter;
    opt.counter = counterOf(counter);
    opt.jobs = jobs;
    return fromJson(sweepToJson(runSweep(opt)));
  }, py::arg("max_perimeter") = 15, py::arg("counter") = "brute", py::arg("jobs") = 1);

  m.def("census", [] {
    const Census c = baseCaseCensus();
    return std::make_pair(c.family1, c.family2);
  });

  m.def("lemma_identity", [](const std::string& name, int a, int b, int c, const std::string& counter) {
    const auto v = parseLemma(name);
    if (!v) throw py::value_error("unknown lemma " + name);
    return fromJson(reportToJson(lemmaIdentity(*v, a, b, c, counterOf(counter))));
  }, py::arg("name"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("counter") = "kasteleyn");

  m.def("suite", [](const std::string& name, int grid, int maxPerimeter) {
    SuiteResult r;
    if (name == "recurrences") r = recurrenceSuite(grid);
    else if (name == "flips") r = flipSuite(grid, maxPerimeter);
    else if (name == "weighted") r = weightedSuite(grid, maxPerimeter, builtinCorpus(maxPerimeter));
    else if (name == "kuo") r = kuoSuite(builtinCorpus(maxPerimeter), {Counter::Brute, Counter::Kasteleyn});
    else if (name == "lemmas") r = lemmaSuite(static_cast<std::size_t>(grid), 4 * maxPerimeter, Counter::Kasteleyn);
    else throw py::value_error("unknown suite " + name);
    return fromJson(suiteToJson(r));
  }, py::arg("name"), py::arg("grid") = 10, py::arg("max_perimeter") = 15);
}
