#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dragon/bigint.hpp"
#include "dragon/weight_poly.hpp"

namespace dragon {

enum class FormulaId { Phi, Psi, W1, W2, N1, N2 };

std::string formulaName(FormulaId f);  // "phi", "psi", "w1", ...
std::optional<FormulaId> parseFormula(std::string_view name);

class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NegativeExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonIntegerExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The value 2^two * 3^three, possibly a proper fraction.
struct Exponents {
  std::int64_t two = 0;
  std::int64_t three = 0;

  bool operator==(const Exponents&) const = default;
  Exponents operator+(const Exponents& o) const { return {two + o.two, three + o.three}; }
};

Exponents phiExp(std::int64_t a, std::int64_t b, std::int64_t c);
Exponents psiExp(std::int64_t a, std::int64_t b, std::int64_t c);

// Throw NegativeExponent when the value is not an integer.
BigInt phi(std::int64_t a, std::int64_t b, std::int64_t c);
BigInt psi(std::int64_t a, std::int64_t b, std::int64_t c);
BigInt valueOf(const Exponents& e);

// 2^twoExp (x^2+1)^A (x^2+2)^B x^C.
struct WeightedShape {
  std::int64_t twoExp = 0;
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::int64_t C = 0;
};

// which is W1 or W2. Requires a, c >= 0, b >= 1 and the family's d, e >= 0.
WeightedShape weightedShape(FormulaId which, std::int64_t a, std::int64_t b, std::int64_t c);
WeightPoly weightedFormula(FormulaId which, std::int64_t a, std::int64_t b, std::int64_t c);

// which is N1 or N2. Requires b >= 2, 2b - a - 2c >= 0, 3b - 2a - 2c >= 0.
Exponents needleExp(FormulaId which, std::int64_t a, std::int64_t b, std::int64_t c);
BigInt needleFormula(FormulaId which, std::int64_t a, std::int64_t b, std::int64_t c);

enum class RecurrenceId { R1, R2, R3First, R3Second, R4, R5 };

inline constexpr std::array<RecurrenceId, 6> kAllRecurrences{
    RecurrenceId::R1, RecurrenceId::R2, RecurrenceId::R3First,
    RecurrenceId::R3Second, RecurrenceId::R4, RecurrenceId::R5};

std::string recurrenceName(RecurrenceId r);

// One factor of a recurrence: the star function or the diamond function
// evaluated at (a, b, c).
struct Operand {
  bool diamond = false;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

// ops[0] ops[1] = ops[2] ops[3] + ops[4] ops[5].
std::array<Operand, 6> recurrenceOperands(RecurrenceId r, std::int64_t a, std::int64_t b, std::int64_t c);

// Which closed forms play star and diamond.
enum class FormulaPair { PhiPhi, PsiPsi, PhiPsi };

std::string pairName(FormulaPair p);

// Exact check over rationals, valid for any integers a, b, c.
bool checkRecurrence(RecurrenceId r, FormulaPair pair, std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace dragon
