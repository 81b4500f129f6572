#include "dragon/condensation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

#include "dragon/region.hpp"

namespace dragon {

namespace {

std::set<VertexLabel> labelsOf(const DualGraph& g, std::initializer_list<std::size_t> idx) {
  std::set<VertexLabel> out;
  for (std::size_t i : idx) out.insert(g.vertex(i).label);
  return out;
}

std::string vertexName(const DualGraph& g, std::size_t i) {
  const auto& v = g.vertex(i);
  if (v.face) return fmt::format("{}({},{})", kindName(v.face->kind), v.face->p, v.face->q);
  return fmt::format("#{}", v.label);
}

Family lemmaFamily(LemmaVariant v) {
  switch (v) {
    case LemmaVariant::L31F2:
    case LemmaVariant::L32aF2:
    case LemmaVariant::L32bSecond:
    case LemmaVariant::L33aF2:
    case LemmaVariant::L33bF2:
      return Family::F2;
    default:
      return Family::F1;
  }
}

void require(bool ok, std::string_view what) {
  if (!ok) throw HypothesisViolation(fmt::format("hypothesis violated: {}", what));
}

}  // namespace

nlohmann::json reportToJson(const IdentityReport& report) {
  nlohmann::json operands = nlohmann::json::array();
  for (std::size_t k = 0; k < report.operands.size(); ++k) {
    nlohmann::json op{{"name", report.operands[k]}};
    if (k < report.operandCounts.size()) op["count"] = toDecimal(report.operandCounts[k]);
    operands.push_back(std::move(op));
  }
  return {{"holds", report.holds},
          {"lhs", toDecimal(report.lhs)},
          {"operands", std::move(operands)},
          {"rhs1", toDecimal(report.rhsTerm1)},
          {"rhs2", toDecimal(report.rhsTerm2)}};
}

void validateFourPoint(const DualGraph& g, const FourPoint& fp) {
  validateFourPoint(g, faceWalks(g), fp);
}

void validateFourPoint(const DualGraph& g, const std::vector<FaceWalk>& faces, const FourPoint& fp) {
  const std::array<std::size_t, 4> pts{fp.u, fp.v, fp.w, fp.t};
  for (std::size_t x : pts) {
    if (x >= g.size()) throw InvalidFourPoint(fmt::format("vertex {} out of range", x));
  }
  if (std::set<std::size_t>(pts.begin(), pts.end()).size() != 4) {
    throw InvalidFourPoint("the four vertices must be distinct");
  }
  if (g.countColor(Color::Black) != g.countColor(Color::White)) {
    throw InvalidFourPoint("color classes differ in size");
  }
  const Color cu = g.vertex(fp.u).color;
  if (g.vertex(fp.w).color != cu || g.vertex(fp.v).color == cu || g.vertex(fp.t).color == cu) {
    throw InvalidFourPoint("u, w must share a color and v, t must have the other");
  }
  for (const auto& face : faces) {
    std::array<std::size_t, 4> pos{};
    bool onFace = true;
    for (std::size_t k = 0; k < 4 && onFace; ++k) {
      const auto hits = std::ranges::count(face.vertices, pts[k]);
      if (hits != 1) {
        onFace = false;
        break;
      }
      pos[k] = static_cast<std::size_t>(std::ranges::find(face.vertices, pts[k]) - face.vertices.begin());
    }
    if (!onFace) continue;
    const std::size_t len = face.vertices.size();
    auto rel = [&](std::size_t k) { return (pos[k] + len - pos[0]) % len; };
    if ((rel(1) < rel(2) && rel(2) < rel(3)) || (rel(3) < rel(2) && rel(2) < rel(1))) return;
  }
  throw InvalidFourPoint("u, v, w, t do not appear in cyclic order on a single face");
}

IdentityReport kuoCheck(const DualGraph& g, const FourPoint& fp, Counter counter) {
  validateFourPoint(g, fp);
  const auto count = [&](std::initializer_list<std::size_t> drop) {
    return countMatchings(deleteVertices(g, labelsOf(g, drop)), counter);
  };
  IdentityReport r;
  const BigInt whole = countMatchings(g, counter);
  const BigInt all4 = count({fp.u, fp.v, fp.w, fp.t});
  const BigInt uv = count({fp.u, fp.v});
  const BigInt wt = count({fp.w, fp.t});
  const BigInt tu = count({fp.t, fp.u});
  const BigInt vw = count({fp.v, fp.w});
  r.lhs = whole * all4;
  r.rhsTerm1 = uv * wt;
  r.rhsTerm2 = tu * vw;
  r.holds = r.lhs == r.rhsTerm1 + r.rhsTerm2;
  const std::string u = vertexName(g, fp.u);
  const std::string v = vertexName(g, fp.v);
  const std::string w = vertexName(g, fp.w);
  const std::string t = vertexName(g, fp.t);
  r.operands = {"G",
                fmt::format("G-{{{},{},{},{}}}", u, v, w, t),
                fmt::format("G-{{{},{}}}", u, v),
                fmt::format("G-{{{},{}}}", w, t),
                fmt::format("G-{{{},{}}}", t, u),
                fmt::format("G-{{{},{}}}", v, w)};
  r.operandCounts = {whole, all4, uv, wt, tu, vw};
  return r;
}

std::vector<FourPoint> enumerateFourPoints(const DualGraph& g, const FaceWalk& face) {
  std::map<std::size_t, int> visits;
  for (std::size_t v : face.vertices) ++visits[v];
  std::vector<std::size_t> simple;
  for (std::size_t v : face.vertices) {
    if (visits[v] == 1) simple.push_back(v);
  }
  std::vector<FourPoint> out;
  const std::size_t n = simple.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          std::array<std::size_t, 4> q{simple[i], simple[j], simple[k], simple[l]};
          const Color c0 = g.vertex(q[0]).color;
          if (g.vertex(q[2]).color != c0 || g.vertex(q[1]).color == c0 || g.vertex(q[3]).color == c0) {
            continue;
          }
          const auto least = std::ranges::min_element(q) - q.begin();
          std::ranges::rotate(q, q.begin() + least);
          out.push_back({q[0], q[1], q[2], q[3]});
        }
      }
    }
  }
  std::ranges::sort(out, [](const FourPoint& x, const FourPoint& y) {
    return std::tie(x.u, x.v, x.w, x.t) < std::tie(y.u, y.v, y.w, y.t);
  });
  return out;
}

std::string lemmaName(LemmaVariant v) {
  switch (v) {
    case LemmaVariant::L31F1: return "L31-F1";
    case LemmaVariant::L31F2: return "L31-F2";
    case LemmaVariant::L32aF1: return "L32a-F1";
    case LemmaVariant::L32aF2: return "L32a-F2";
    case LemmaVariant::L32bFirst: return "L32b-first";
    case LemmaVariant::L32bSecond: return "L32b-second";
    case LemmaVariant::L33aF1: return "L33a-F1";
    case LemmaVariant::L33aF2: return "L33a-F2";
    case LemmaVariant::L33bF1: return "L33b-F1";
    case LemmaVariant::L33bF2: return "L33b-F2";
  }
  return "?";
}

std::optional<LemmaVariant> parseLemma(std::string_view name) {
  for (LemmaVariant v : kAllLemmaVariants) {
    if (lemmaName(v) == name) return v;
  }
  return std::nullopt;
}

RecurrenceId lemmaRecurrence(LemmaVariant v) {
  switch (v) {
    case LemmaVariant::L31F1:
    case LemmaVariant::L31F2: return RecurrenceId::R1;
    case LemmaVariant::L32aF1:
    case LemmaVariant::L32aF2: return RecurrenceId::R2;
    case LemmaVariant::L32bFirst: return RecurrenceId::R3First;
    case LemmaVariant::L32bSecond: return RecurrenceId::R3Second;
    case LemmaVariant::L33aF1:
    case LemmaVariant::L33aF2: return RecurrenceId::R4;
    case LemmaVariant::L33bF1:
    case LemmaVariant::L33bF2: return RecurrenceId::R5;
  }
  throw std::invalid_argument("unknown lemma variant");
}

void checkLemmaHypotheses(LemmaVariant v, int a, int b, int c) {
  require(a >= 0, "a >= 0");
  require(b >= 0, "b >= 0");
  require(c >= 0, "c >= 0");
  const int shift = lemmaFamily(v) == Family::F1 ? 1 : -1;
  const int d = 2 * b - a - 2 * c + shift;
  const int e = 3 * b - 2 * a - 2 * c + shift;
  switch (lemmaRecurrence(v)) {
    case RecurrenceId::R1:
      require(b >= 5, "b >= 5");
      require(c >= 2, "c >= 2");
      require(d >= 0, "d >= 0");
      require(e >= 0, "e >= 0");
      require(a >= c + d + 1, "a >= c + d + 1");
      return;
    case RecurrenceId::R2:
      require(a >= 2, "a >= 2");
      require(b >= 4, "b >= 4");
      require(c >= 1, "c >= 1");
      require(d >= 2, "d >= 2");
      require(e >= 2, "e >= 2");
      return;
    case RecurrenceId::R3First:
    case RecurrenceId::R3Second:
      require(a >= 2, "a >= 2");
      require(b >= 4, "b >= 4");
      require(c == 0, "c = 0");
      require(d >= 2, "d >= 2");
      require(e >= 2, "e >= 2");
      return;
    case RecurrenceId::R4:
      require(a >= 2, "a >= 2");
      require(b >= 5, "b >= 5");
      require(c >= 2, "c >= 2");
      require(d >= 1, "d >= 1");
      require(e >= 0, "e >= 0");
      require(a <= c + d, "a <= c + d");
      return;
    case RecurrenceId::R5:
      require(a >= 2, "a >= 2");
      require(b >= 5, "b >= 5");
      require(c >= 2, "c >= 2");
      require(d == 0, "d = 0");
      require(e >= 0, "e >= 0");
      require(a <= c + d, "a <= c + d");
      return;
  }
}

bool lemmaApplies(LemmaVariant v, int a, int b, int c) {
  try {
    checkLemmaHypotheses(v, a, b, c);
    return true;
  } catch (const HypothesisViolation&) {
    return false;
  }
}

std::array<ContourSpec, 6> lemmaOperands(LemmaVariant v, int a, int b, int c) {
  checkLemmaHypotheses(v, a, b, c);
  Family star = lemmaFamily(v);
  Family diamond = star == Family::F1 ? Family::F2 : Family::F1;
  if (v == LemmaVariant::L32bFirst || v == LemmaVariant::L32bSecond) {
    star = Family::F1;
    diamond = Family::F2;
  }
  const auto ops = recurrenceOperands(lemmaRecurrence(v), a, b, c);
  std::array<ContourSpec, 6> specs;
  for (std::size_t k = 0; k < 6; ++k) {
    const Family f = ops[k].diamond ? diamond : star;
    const auto label = fmt::format("DR{}({},{},{})", familyIndex(f), ops[k].a, ops[k].b, ops[k].c);
    try {
      specs[k] = deriveSides(f, static_cast<int>(ops[k].a), static_cast<int>(ops[k].b),
                             static_cast<int>(ops[k].c));
    } catch (const PreconditionError&) {
      throw MissingRegion(label + " does not exist");
    }
    if (!isConstructible(specs[k])) throw MissingRegion(label + " does not exist");
  }
  return specs;
}

IdentityReport lemmaIdentity(LemmaVariant v, int a, int b, int c, Counter counter) {
  const auto specs = lemmaOperands(v, a, b, c);
  IdentityReport r;
  for (const auto& s : specs) {
    r.operands.push_back(s.label());
    r.operandCounts.push_back(countMatchings(dualOf(buildRegion(s)), counter));
  }
  const auto& m = r.operandCounts;
  r.lhs = m[0] * m[1];
  r.rhsTerm1 = m[2] * m[3];
  r.rhsTerm2 = m[4] * m[5];
  r.holds = r.lhs == r.rhsTerm1 + r.rhsTerm2;
  return r;
}

std::vector<std::array<int, 3>> lemmaTriples(LemmaVariant v, std::size_t limit, int maxOperandPerimeter) {
  struct Found {
    int perimeter;
    std::array<int, 3> abc;
  };
  std::vector<Found> found;
  // Every side of a contour is at most half its perimeter.
  const int bound = maxOperandPerimeter / 2 + 1;
  for (int a = 0; a <= bound; ++a) {
    for (int b = 0; b <= bound; ++b) {
      for (int c = 0; c <= bound; ++c) {
        if (!lemmaApplies(v, a, b, c)) continue;
        const auto specs = lemmaOperands(v, a, b, c);
        const bool small = std::ranges::all_of(
            specs, [&](const ContourSpec& s) { return perimeter(s) <= maxOperandPerimeter; });
        if (small) found.push_back({perimeter(specs[0]), {a, b, c}});
      }
    }
  }
  std::ranges::sort(found, [](const Found& x, const Found& y) {
    return std::tie(x.perimeter, x.abc) < std::tie(y.perimeter, y.abc);
  });
  std::vector<std::array<int, 3>> out;
  for (std::size_t k = 0; k < found.size() && k < limit; ++k) out.push_back(found[k].abc);
  return out;
}

}  // namespace dragon
