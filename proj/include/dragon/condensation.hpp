#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dragon/bigint.hpp"
#include "dragon/contour.hpp"
#include "dragon/counting.hpp"
#include "dragon/dual_graph.hpp"
#include "dragon/formulas.hpp"

namespace dragon {

// Vertex indices of a graph. u and w share a color, v and t have the other,
// and the four sit in this cyclic order on one face walk (either direction).
struct FourPoint {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t w = 0;
  std::size_t t = 0;

  bool operator==(const FourPoint&) const = default;
};

class InvalidFourPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingRegion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// lhs = rhsTerm1 + rhsTerm2, each term a product of two counts.
struct IdentityReport {
  BigInt lhs;
  BigInt rhsTerm1;
  BigInt rhsTerm2;
  bool holds = false;
  std::vector<std::string> operands;
  std::vector<BigInt> operandCounts;
};

nlohmann::json reportToJson(const IdentityReport& report);

// Throws InvalidFourPoint unless fp satisfies the condensation hypotheses.
void validateFourPoint(const DualGraph& g, const FourPoint& fp);
void validateFourPoint(const DualGraph& g, const std::vector<FaceWalk>& faces, const FourPoint& fp);

// M(G) M(G-{u,v,w,t}) = M(G-{u,v}) M(G-{w,t}) + M(G-{t,u}) M(G-{v,w}).
IdentityReport kuoCheck(const DualGraph& g, const FourPoint& fp, Counter counter);

// Every four-subset of the face's simple boundary vertices (vertices that the
// walk visits once) whose colors alternate around the face. Each subset is
// reported once, starting from its least vertex and following the walk.
std::vector<FourPoint> enumerateFourPoints(const DualGraph& g, const FaceWalk& face);

enum class LemmaVariant {
  L31F1, L31F2, L32aF1, L32aF2, L32bFirst, L32bSecond, L33aF1, L33aF2, L33bF1, L33bF2
};

inline constexpr std::array<LemmaVariant, 10> kAllLemmaVariants{
    LemmaVariant::L31F1,  LemmaVariant::L31F2,     LemmaVariant::L32aF1, LemmaVariant::L32aF2,
    LemmaVariant::L32bFirst, LemmaVariant::L32bSecond, LemmaVariant::L33aF1, LemmaVariant::L33aF2,
    LemmaVariant::L33bF1, LemmaVariant::L33bF2};

std::string lemmaName(LemmaVariant v);  // "L31-F1", "L32b-first", ...
std::optional<LemmaVariant> parseLemma(std::string_view name);
RecurrenceId lemmaRecurrence(LemmaVariant v);

// Throws HypothesisViolation naming the first failed inequality.
void checkLemmaHypotheses(LemmaVariant v, int a, int b, int c);
bool lemmaApplies(LemmaVariant v, int a, int b, int c);

// The six regions of the lemma's recurrence, star regions from the lemma's
// family and diamond regions from the other one.
std::array<ContourSpec, 6> lemmaOperands(LemmaVariant v, int a, int b, int c);

IdentityReport lemmaIdentity(LemmaVariant v, int a, int b, int c, Counter counter = Counter::Kasteleyn);

// In-hypothesis triples whose six operands all have perimeter at most
// maxOperandPerimeter, in order of (perimeter, a, b, c); at most limit.
std::vector<std::array<int, 3>> lemmaTriples(LemmaVariant v, std::size_t limit, int maxOperandPerimeter);

}  // namespace dragon
