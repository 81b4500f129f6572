#include <gtest/gtest.h>

#include "dragon/formulas.hpp"
#include "oracles.hpp"

using namespace dragon;

TEST(Formulas, PhiPsiExamples) {
  EXPECT_EQ(phi(1, 1, 0), 4);
  EXPECT_EQ(phi(3, 3, 0), 4096);
  EXPECT_EQ(phi(8, 8, 3), pow2pow3(30, 3));
  EXPECT_EQ(phi(2, 2, 1), 4);
  EXPECT_EQ(psi(2, 3, 1), 16);
  EXPECT_EQ(psi(8, 8, 2), pow2pow3(30, 3));
  for (long n = 1; n <= 6; ++n) {
    EXPECT_EQ(phi(n, n, 0), pow2pow3(static_cast<unsigned long>(n * (n + 1)), 0));
    EXPECT_EQ(psi(n + 1, n + 2, 1), pow2pow3(static_cast<unsigned long>(n * (n + 2) + 1), 0));
  }
}

TEST(Formulas, Exponents) {
  EXPECT_EQ(phiExp(1, 1, 0), (Exponents{2, 0}));
  EXPECT_EQ(psiExp(2, 3, 1), (Exponents{4, 0}));
  EXPECT_EQ(phiExp(0, 0, 0), (Exponents{0, 0}));
  EXPECT_THROW(valueOf({-1, 0}), NegativeExponent);
}

TEST(Formulas, ValuesAreAlwaysIntegers) {
  // Both 2-exponents are x^2 - xy + y^2 -+ (x - y) with x = a - b, y = b - c,
  // whose minimum over the reals is -1/3.
  for (int a = -15; a <= 15; ++a) {
    for (int b = -15; b <= 15; ++b) {
      for (int c = -15; c <= 15; ++c) {
        EXPECT_GE(phiExp(a, b, c).two, 0);
        EXPECT_GE(psiExp(a, b, c).two, 0);
        EXPECT_GE(phiExp(a, b, c).three, 0);
        EXPECT_GE(psiExp(a, b, c).three, 0);
      }
    }
  }
}

TEST(Formulas, MatchOracleOnGrid) {
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      for (long c = -6; c <= 6; ++c) {
        const Exponents p = phiExp(a, b, c);
        const Exponents s = psiExp(a, b, c);
        EXPECT_EQ(oracle::powerOf(2, p.two) * oracle::powerOf(3, p.three), oracle::phi(a, b, c));
        EXPECT_EQ(oracle::powerOf(2, s.two) * oracle::powerOf(3, s.three), oracle::psi(a, b, c));
      }
    }
  }
}

TEST(Formulas, Weighted) {
  EXPECT_EQ(weightedFormula(FormulaId::W1, 1, 1, 0).toString(), "x^4 + 2x^2 + 1");
  EXPECT_EQ(weightedFormula(FormulaId::W1, 2, 2, 0).evaluateAtOne(), 64);
  EXPECT_EQ(weightedFormula(FormulaId::W2, 2, 3, 1).evaluateAtOne(), 16);
  EXPECT_THROW(weightedFormula(FormulaId::W1, 9, 5, 0), HypothesisViolation);
  EXPECT_THROW(weightedFormula(FormulaId::Phi, 1, 1, 0), std::invalid_argument);
}

TEST(Formulas, NeedleExamples) {
  EXPECT_EQ(needleFormula(FormulaId::N1, 2, 2, 0), 144);
  EXPECT_EQ(needleFormula(FormulaId::N2, 2, 2, 0), 144);
  EXPECT_EQ(needleExp(FormulaId::N1, 2, 3, 1), (Exponents{6, 4}));
  EXPECT_THROW(needleExp(FormulaId::N1, 2, 1, 0), HypothesisViolation);
}

TEST(Formulas, NeedleExponentsAreAlwaysIntegers) {
  for (int a = 0; a <= 30; ++a) {
    for (int b = 2; b <= 30; ++b) {
      for (int c = 0; c <= 30; ++c) {
        if (2 * b - a - 2 * c < 0 || 3 * b - 2 * a - 2 * c < 0) continue;
        EXPECT_NO_THROW(needleExp(FormulaId::N1, a, b, c));
        const Exponents n1 = needleExp(FormulaId::N1, a, b, c);
        const Exponents n2 = needleExp(FormulaId::N2, a, b, c);
        EXPECT_EQ(n1.two, n2.two);
        EXPECT_EQ(n2.three - n1.three, (b - a) + std::min(2 * a - 2 * b + c, 0));
      }
    }
  }
}

TEST(Formulas, RecurrenceExamples) {
  EXPECT_TRUE(checkRecurrence(RecurrenceId::R2, FormulaPair::PhiPhi, 4, 4, 1));
  EXPECT_TRUE(checkRecurrence(RecurrenceId::R3First, FormulaPair::PhiPsi, 4, 4, 0));
  // 2^26 = 2^24 + 2^12 * 2^12 * 3
  EXPECT_EQ(phi(4, 4, 0) * phi(2, 2, 0), pow2pow3(26, 0));
  EXPECT_EQ(phi(4, 4, 1) * psi(5, 5, 1), pow2pow3(24, 1));
}

TEST(Formulas, RecurrencesAgreeWithOracle) {
  for (RecurrenceId r : kAllRecurrences) {
    for (int a = -4; a <= 4; ++a) {
      for (int b = -4; b <= 4; ++b) {
        for (int c = -4; c <= 4; ++c) {
          const auto ops = recurrenceOperands(r, a, b, c);
          auto value = [&](const Operand& o, FormulaPair p) {
            const bool usePhi = p == FormulaPair::PhiPhi || (p == FormulaPair::PhiPsi && !o.diamond);
            return usePhi ? oracle::phi(o.a, o.b, o.c) : oracle::psi(o.a, o.b, o.c);
          };
          for (FormulaPair p : {FormulaPair::PhiPhi, FormulaPair::PsiPsi, FormulaPair::PhiPsi}) {
            const bool holds = value(ops[0], p) * value(ops[1], p) ==
                               value(ops[2], p) * value(ops[3], p) + value(ops[4], p) * value(ops[5], p);
            EXPECT_EQ(checkRecurrence(r, p, a, b, c), holds) << recurrenceName(r) << " " << pairName(p);
          }
        }
      }
    }
  }
}

TEST(Formulas, Names) {
  for (FormulaId f : {FormulaId::Phi, FormulaId::Psi, FormulaId::W1, FormulaId::W2, FormulaId::N1, FormulaId::N2}) {
    EXPECT_EQ(parseFormula(formulaName(f)), f);
  }
  EXPECT_FALSE(parseFormula("zeta").has_value());
}
