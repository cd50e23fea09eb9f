#include "soliton_forge/algebra/parse.hpp"
#include "soliton_forge/algebra/poly.hpp"
#include "soliton_forge/algebra/scalar_expr.hpp"

#include <gtest/gtest.h>

#include <random>

namespace sforge {
namespace {

ScalarExpr e(const char* text) { return parse_expr(text); }

TEST(ScalarExpr, CancelsCommonFactors) {
  EXPECT_EQ(e("(a^2 - 1)/(a - 1)"), e("a + 1"));
  EXPECT_EQ(e("(a*b + a*c)/(b + c)"), e("a"));
  EXPECT_EQ(e("(x^2 - y^2)/(x + y)").to_string(), "x - y");
}

TEST(ScalarExpr, ZeroIsCanonical) {
  const ScalarExpr z = e("a/b - a/b");
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, ScalarExpr(0));
  EXPECT_EQ(z.to_string(), "0");
}

TEST(ScalarExpr, DenominatorSignIsNormalized) {
  EXPECT_EQ(e("1/(-a)"), e("-1/a"));
  EXPECT_EQ(e("a/(2*b)"), e("(a/2)/b"));
}

TEST(ScalarExpr, DivisionByZeroThrows) {
  EXPECT_THROW(e("a") / e("b - b"), DivisionByZero);
  // the parser reports these as parse errors at the offending operator
  EXPECT_THROW(e("1/(a - a)"), ParseError);
  EXPECT_THROW(e("0^-1"), ParseError);
  EXPECT_THROW(ScalarExpr(0).pow(-1), DivisionByZero);
}

TEST(ScalarExpr, SubstituteIsSimultaneous) {
  const Bindings swap{{Sym("a"), e("b")}, {Sym("b"), e("a")}};
  EXPECT_EQ(e("a - 2*b").substitute(swap), e("b - 2*a"));
}

TEST(ScalarExpr, SubstituteIntoVanishingDenominatorThrows) {
  EXPECT_THROW(e("1/(a - 1)").substitute({{Sym("a"), ScalarExpr(1)}}), DivisionByZero);
}

TEST(ScalarExpr, PrintsLikeTheExamples) {
  EXPECT_EQ(e("(beta*r - 2*lambda)/(2*alpha)").to_string(), "(beta*r - 2*lambda)/(2*alpha)");
  EXPECT_EQ(e("3*a^2*(beta - alpha)").to_string(), "-3*a^2*alpha + 3*a^2*beta");
}

TEST(ScalarExpr, PowerRules) {
  EXPECT_EQ(e("a").pow(3), e("a*a*a"));
  EXPECT_EQ(e("(a+1)").pow(-2), e("1/(a^2 + 2*a + 1)"));
  EXPECT_EQ(e("a^0"), ScalarExpr(1));
}

// Field axioms over random small rational functions.
class FieldAxioms : public ::testing::Test {
 protected:
  ScalarExpr random_expr() {
    static const char* atoms[] = {"a", "b", "c", "1", "2", "-3", "1/2"};
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> op(0, 2);
    ScalarExpr x = e(atoms[pick(rng_)]);
    for (int k = 0; k < 3; ++k) {
      const ScalarExpr y = e(atoms[pick(rng_)]);
      switch (op(rng_)) {
        case 0: x += y; break;
        case 1: x *= y; break;
        default: x = y.is_zero() ? x : x / (y + e("a"));
      }
    }
    return x;
  }
  std::mt19937_64 rng_{20261017};
};

TEST_F(FieldAxioms, HoldOnRandomSamples) {
  for (int trial = 0; trial < 60; ++trial) {
    const ScalarExpr x = random_expr();
    const ScalarExpr y = random_expr();
    const ScalarExpr z = random_expr();
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) EXPECT_EQ(x / x, ScalarExpr(1));
  }
}

TEST_F(FieldAxioms, PrintParseRoundTrip) {
  for (int trial = 0; trial < 60; ++trial) {
    const ScalarExpr x = random_expr();
    EXPECT_EQ(parse_expr(x.to_string()), x) << x.to_string();
  }
}

TEST(Parse, Precedence) {
  EXPECT_EQ(e("-a^2"), -(e("a") * e("a")));
  EXPECT_EQ(e("2^-1"), ScalarExpr(Rational(1, 2)));
  EXPECT_EQ(e("a - b - c"), e("a - (b + c)"));
  EXPECT_EQ(e("a / b / c"), e("a / (b * c)"));
}

TEST(Parse, ReportsOffsets) {
  try {
    parse_expr("a + * b");
    FAIL() << "expected a parse error";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.position(), 4U);
  }
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("(a"), ParseError);
  EXPECT_THROW(parse_expr("a $ b"), ParseError);
}

TEST(Poly, GcdIsMultivariate) {
  const Poly x = Poly::variable("x");
  const Poly y = Poly::variable("y");
  const Poly common = x * y + Poly(1);
  const Poly a = common * (x - y);
  const Poly b = common * (x + y) * (x + y);
  EXPECT_EQ(gcd(a, b), common.primitive());
  EXPECT_EQ(gcd(Poly(), Poly()), Poly());
  EXPECT_EQ(gcd(a, Poly()), a.primitive());
}

TEST(Poly, DivideExact) {
  const Poly x = Poly::variable("x");
  const Poly p = (x + Poly(2)) * (x - Poly(3));
  EXPECT_EQ(divide_exact(p, x + Poly(2)), x - Poly(3));
  EXPECT_THROW(divide_exact(p, x + Poly(1)), std::invalid_argument);
}

TEST(Poly, MonomialContentAndPrimitive) {
  const Poly x = Poly::variable("x");
  const Poly y = Poly::variable("y");
  const Poly p = (x * x * y).scaled(6) - (x * y).scaled(4);
  EXPECT_EQ(p.monomial_content().to_string(), "x*y");
  EXPECT_EQ(p.primitive(), (x * x * y).scaled(3) - (x * y).scaled(2));
}

}  // namespace
}  // namespace sforge
