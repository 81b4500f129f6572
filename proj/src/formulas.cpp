#include "dragon/formulas.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

namespace dragon {

namespace {

using I = std::int64_t;

// n(n-1)/2, exact for every integer n.
I pairs(I n) { return n * (n - 1) / 2; }

void require(bool ok, std::string_view what) {
  if (!ok) throw HypothesisViolation(fmt::format("hypothesis violated: {}", what));
}

void requireNonNegative(I a, I b, I c) {
  require(a >= 0, "a >= 0");
  require(b >= 0, "b >= 0");
  require(c >= 0, "c >= 0");
}

Exponents evalOperand(const Operand& op, FormulaPair pair) {
  bool usePhi = false;
  switch (pair) {
    case FormulaPair::PhiPhi: usePhi = true; break;
    case FormulaPair::PsiPsi: usePhi = false; break;
    case FormulaPair::PhiPsi: usePhi = !op.diamond; break;
  }
  return usePhi ? phiExp(op.a, op.b, op.c) : psiExp(op.a, op.b, op.c);
}

}  // namespace

std::string formulaName(FormulaId f) {
  switch (f) {
    case FormulaId::Phi: return "phi";
    case FormulaId::Psi: return "psi";
    case FormulaId::W1: return "w1";
    case FormulaId::W2: return "w2";
    case FormulaId::N1: return "n1";
    case FormulaId::N2: return "n2";
  }
  return "?";
}

std::optional<FormulaId> parseFormula(std::string_view name) {
  for (FormulaId f : {FormulaId::Phi, FormulaId::Psi, FormulaId::W1, FormulaId::W2, FormulaId::N1,
                      FormulaId::N2}) {
    if (formulaName(f) == name) return f;
  }
  return std::nullopt;
}

Exponents phiExp(I a, I b, I c) {
  return {(b - c + 1) * (2 * b - a - c) + (a - b) * (a - b), pairs(a - b + c)};
}

Exponents psiExp(I a, I b, I c) {
  return {(b - c - 1) * (2 * b - a - c) + (a - b) * (a - b), pairs(a - b + c + 1)};
}

BigInt valueOf(const Exponents& e) {
  if (e.two < 0 || e.three < 0) {
    throw NegativeExponent(fmt::format("2^{} 3^{} is not an integer", e.two, e.three));
  }
  return pow2pow3(static_cast<unsigned long>(e.two), static_cast<unsigned long>(e.three));
}

BigInt phi(I a, I b, I c) { return valueOf(phiExp(a, b, c)); }
BigInt psi(I a, I b, I c) { return valueOf(psiExp(a, b, c)); }

WeightedShape weightedShape(FormulaId which, I a, I b, I c) {
  // b = 1 admits the order-1 Aztec dragon, which the closed forms also count.
  requireNonNegative(a, b, c);
  require(b >= 1, "b >= 1");
  const I s = a - b + c;
  if (which == FormulaId::W1) {
    require(2 * b - a - 2 * c + 1 >= 0, "d = 2b - a - 2c + 1 >= 0");
    require(3 * b - 2 * a - 2 * c + 1 >= 0, "e = 3b - 2a - 2c + 1 >= 0");
    return {pairs(a - b), (b - c + 1) * (2 * b - a - c) + pairs(b - a), pairs(s),
            (a - b - 1) * (a - b - 1) + (s - 1) * s - c + std::min<I>(2 * a - 2 * b + c - 1, 0)};
  }
  if (which == FormulaId::W2) {
    require(2 * b - a - 2 * c - 1 >= 0, "d = 2b - a - 2c - 1 >= 0");
    require(3 * b - 2 * a - 2 * c - 1 >= 0, "e = 3b - 2a - 2c - 1 >= 0");
    return {pairs(b - a), (b - c - 1) * (2 * b - a - c) + pairs(a - b), pairs(s + 1),
            (b - a - 1) * (b - a - 1) + (s + 1) * s - std::max<I>(2 * a - 2 * b + c + 1, 0)};
  }
  throw std::invalid_argument("weightedShape needs W1 or W2");
}

WeightPoly weightedFormula(FormulaId which, I a, I b, I c) {
  const WeightedShape w = weightedShape(which, a, b, c);
  if (w.twoExp < 0 || w.A < 0 || w.B < 0) {
    throw NegativeExponent(fmt::format("weighted form has exponents 2:{} A:{} B:{}", w.twoExp, w.A, w.B));
  }
  WeightPoly p = WeightPoly::binomialPower(2, 1, static_cast<unsigned>(w.A)) *
                 WeightPoly::binomialPower(2, 2, static_cast<unsigned>(w.B)) *
                 WeightPoly::monomial(static_cast<int>(w.C), pow2pow3(static_cast<unsigned long>(w.twoExp), 0));
  return p;
}

Exponents needleExp(FormulaId which, I a, I b, I c) {
  if (which != FormulaId::N1 && which != FormulaId::N2) {
    throw std::invalid_argument("needleExp needs N1 or N2");
  }
  requireNonNegative(a, b, c);
  require(b >= 2, "b >= 2");
  require(2 * b - a - 2 * c >= 0, "2b - a - 2c >= 0");
  require(3 * b - 2 * a - 2 * c >= 0, "3b - 2a - 2c >= 0");
  const I twiceTwo = 2 * (a * a - 3 * a * b + 3 * b * b - 3 * b * c + c * c + a * c + a - b) + c -
                     std::llabs(2 * a - 2 * b + c);
  const I twiceThreeLead = (5 * a - 7 * b + 5 * c + 1) * (a - b + c);
  if (twiceTwo % 2 != 0 || twiceThreeLead % 2 != 0) {
    throw NonIntegerExponent(fmt::format("needle exponents at ({},{},{}) are not integers", a, b, c));
  }
  Exponents e{twiceTwo / 2, twiceThreeLead / 2 + b * (b - 1) - a * c};
  if (which == FormulaId::N2) e.three += (b - a) + std::min<I>(2 * a - 2 * b + c, 0);
  return e;
}

BigInt needleFormula(FormulaId which, I a, I b, I c) { return valueOf(needleExp(which, a, b, c)); }

std::string recurrenceName(RecurrenceId r) {
  switch (r) {
    case RecurrenceId::R1: return "R1";
    case RecurrenceId::R2: return "R2";
    case RecurrenceId::R3First: return "R3first";
    case RecurrenceId::R3Second: return "R3second";
    case RecurrenceId::R4: return "R4";
    case RecurrenceId::R5: return "R5";
  }
  return "?";
}

std::string pairName(FormulaPair p) {
  switch (p) {
    case FormulaPair::PhiPhi: return "phi-phi";
    case FormulaPair::PsiPsi: return "psi-psi";
    case FormulaPair::PhiPsi: return "phi-psi";
  }
  return "?";
}

std::array<Operand, 6> recurrenceOperands(RecurrenceId r, I a, I b, I c) {
  auto star = [](I x, I y, I z) { return Operand{false, x, y, z}; };
  auto diamond = [](I x, I y, I z) { return Operand{true, x, y, z}; };
  switch (r) {
    case RecurrenceId::R1:
      return {star(a, b, c), star(a - 3, b - 3, c - 2), star(a - 2, b - 1, c),
              star(a - 1, b - 2, c - 2), star(a - 1, b - 1, c - 1), star(a - 2, b - 2, c - 1)};
    case RecurrenceId::R2:
      return {star(a, b, c), star(a - 2, b - 2, c), star(a - 1, b - 1, c),
              star(a - 1, b - 1, c), star(a, b, c + 1), star(a - 2, b - 2, c - 1)};
    // R3 lives on c = 0; the third argument is ignored.
    case RecurrenceId::R3First:
      return {star(a, b, 0), star(a - 2, b - 2, 0), star(a - 1, b - 1, 0),
              star(a - 1, b - 1, 0), star(a, b, 1), diamond(3 * b - 2 * a + 1, 2 * b - a + 1, 1)};
    case RecurrenceId::R3Second:
      return {diamond(a, b, 0), diamond(a - 2, b - 2, 0), diamond(a - 1, b - 1, 0),
              diamond(a - 1, b - 1, 0), diamond(a, b, 1), star(3 * b - 2 * a - 1, 2 * b - a - 1, 1)};
    case RecurrenceId::R4:
      return {star(a, b, c), star(a - 2, b - 3, c - 2), star(a - 1, b - 1, c),
              star(a - 1, b - 2, c - 2), star(a - 2, b - 2, c - 1), star(a, b - 1, c - 1)};
    case RecurrenceId::R5:
      return {star(a, b, c), star(a - 2, b - 3, c - 2), star(c, b - 1, a - 1),
              star(a - 1, b - 2, c - 2), star(a - 2, b - 2, c - 1), star(a, b - 1, c - 1)};
  }
  throw std::invalid_argument("unknown recurrence");
}

bool checkRecurrence(RecurrenceId r, FormulaPair pair, I a, I b, I c) {
  const auto ops = recurrenceOperands(r, a, b, c);
  std::array<Exponents, 3> terms;
  for (std::size_t k = 0; k < 3; ++k) {
    terms[k] = evalOperand(ops[2 * k], pair) + evalOperand(ops[2 * k + 1], pair);
  }
  I low2 = terms[0].two;
  I low3 = terms[0].three;
  for (const auto& t : terms) {
    low2 = std::min(low2, t.two);
    low3 = std::min(low3, t.three);
  }
  // Multiply through by 2^-low2 3^-low3 so every term is an integer.
  std::array<BigInt, 3> scaled;
  for (std::size_t k = 0; k < 3; ++k) {
    scaled[k] = valueOf({terms[k].two - low2, terms[k].three - low3});
  }
  return scaled[0] == scaled[1] + scaled[2];
}

}  // namespace dragon
