#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awq/scalar.hpp"
#include "random_scalars.hpp"

using namespace awq;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("upoly division and gcd") {
  UPoly a({Rational(-1), Rational(0), Rational(1)});  // u^2 - 1
  UPoly b({Rational(1), Rational(1)});                // u + 1
  auto [q, r] = UPoly::divmod(a, b);
  CHECK(q == UPoly({Rational(-1), Rational(1)}));
  CHECK(r.is_zero());
  CHECK(UPoly::gcd(a, b * UPoly({Rational(2), Rational(0), Rational(1)})) == b);
  CHECK(UPoly::gcd(UPoly::monomial(3), UPoly::monomial(5, Rational(7))) == UPoly::monomial(3));
  CHECK_THROWS_AS(UPoly::divmod(a, UPoly()), DivisionByZero);
}

TEST_CASE("scalar_arith examples") {
  const Scalar u = Scalar::u();
  CHECK(u * u == Scalar::u_pow(2));

  const Scalar one_minus_u = Scalar(1) - u;
  const Scalar sum = Scalar(1) / one_minus_u + u / one_minus_u;
  CHECK(sum == (Scalar(1) + u) / one_minus_u);
  // den monic: (1+u)/(1-u) = (-u-1)/(u-1)
  CHECK(sum.den() == UPoly({Rational(-1), Rational(1)}));
  CHECK(sum.num() == UPoly({Rational(-1), Rational(-1)}));
  CHECK(UPoly::gcd(sum.num(), sum.den()).degree() == 0);

  CHECK_THROWS_AS(Scalar::u_pow(2) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("laurent denominators stay monomial") {
  Scalar x = Scalar::u_pow(-3) + Scalar::u_pow(2);
  CHECK(x.is_laurent());
  CHECK(x.den() == UPoly::monomial(3));
  CHECK(x * Scalar::u_pow(3) == Scalar::u_pow(5) + Scalar(1));
  CHECK((Scalar::u_pow(4) - Scalar::u_pow(-4)) / (Scalar::u_pow(2) - Scalar::u_pow(-2)) ==
        Scalar::u_pow(2) + Scalar::u_pow(-2));
}

TEST_CASE("scalar_eval examples") {
  const Scalar alpha = (Scalar::u_pow(2) + Scalar::u_pow(-2)) / Scalar(2);
  CHECK(alpha.str() == "(u^4+1)/(2*u^2)");
  CHECK(scalar_eval(alpha, Rational(1, 2)) == Rational(17, 8));
  CHECK(scalar_eval(Scalar(1), Rational(3, 7)) == Rational(1));
  CHECK(scalar_eval(Scalar(1), Rational(5)) == Rational(1));
  CHECK_THROWS_AS(scalar_eval(Scalar(1) / (Scalar(1) - Scalar::u()), Rational(1)), PoleError);
  CHECK_THROWS_AS(scalar_eval(Scalar::u_pow(-1), Rational(0)), PoleError);

  Diagnostics diag;
  scalar_eval(Scalar::u(), Rational(2), &diag);
  CHECK(diag.warnings.size() == 1);
  Diagnostics quiet;
  scalar_eval(Scalar::u(), Rational(1, 2), &quiet);
  CHECK(quiet.warnings.empty());
}

TEST_CASE("rendering and parsing") {
  CHECK(Scalar(Rational(-3, 4)).str() == "-3/4");
  CHECK(Scalar::u_pow(-2).str() == "1/u^2");
  CHECK(Scalar::parse("(u^4+1)/(2*u^2)") == (Scalar::u_pow(2) + Scalar::u_pow(-2)) / Scalar(2));
  CHECK(Scalar::parse("q^-1") == Scalar::u_pow(-4));
  CHECK(Scalar::parse("q^(-1)") == Scalar::u_pow(-4));
  CHECK(Scalar::parse(" -u^2/2 ") == -Scalar::u_pow(2) / Scalar(2));
  CHECK(Scalar::parse("1/2") == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(Scalar::parse("u +"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("z"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/(u-u)"), DivisionByZero);
}

TEST_CASE("property: field axioms, canonical form, rendering round trip") {
  testing::Gen gen(20261015);
  for (int trial = 0; trial < 150; ++trial) {
    Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(Scalar(a.num(), a.den()) == a);
    CHECK(a.den().is_monic());
    CHECK(UPoly::gcd(a.num(), a.den()).degree() <= 0);
    CHECK(Scalar::parse(a.str()) == a);
  }
}

TEST_CASE("property: evaluation is a field homomorphism away from poles") {
  testing::Gen gen(7);
  const Rational u0(2, 5);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = gen.scalar(), b = gen.scalar();
    Rational ea, eb;
    try {
      ea = scalar_eval(a, u0);
      eb = scalar_eval(b, u0);
    } catch (const PoleError&) {
      continue;
    }
    CHECK(scalar_eval(a + b, u0) == ea + eb);
    CHECK(scalar_eval(a - b, u0) == ea - eb);
    CHECK(scalar_eval(a * b, u0) == ea * eb);
    if (!eb.is_zero()) CHECK(scalar_eval(a / b, u0) == ea / eb);
    ++checked;
  }
  CHECK(checked > 150);
}

namespace {

// Textbook monic Euclid over Q, kept deliberately naive as an oracle.
UPoly naive_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

}  // namespace

TEST_CASE("property: gcd agrees with plain Euclid") {
  testing::Gen g(2024);
  for (int i = 0; i < 200; ++i) {
    UPoly common = g.upoly(3), a = g.upoly(5), b = g.upoly(5);
    if (g.integer(0, 1)) common = common * UPoly::monomial(g.integer(0, 4));
    a = a * common;
    b = b * common;
    if (a.is_zero() && b.is_zero()) continue;
    const UPoly got = UPoly::gcd(a, b);
    CHECK(got == naive_gcd(a, b));
    if (!got.is_zero()) {
      CHECK(UPoly::divmod(a, got).second.is_zero());
      CHECK(UPoly::divmod(b, got).second.is_zero());
    }
  }
  CHECK(UPoly::gcd(UPoly::monomial(3), UPoly::monomial(5, Rational(2))) == UPoly::monomial(3));
  CHECK(UPoly::gcd(UPoly(), UPoly()).is_zero());
}
