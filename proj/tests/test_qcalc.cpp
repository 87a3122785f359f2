#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awq/qcalc.hpp"
#include "random_scalars.hpp"

using namespace awq;
using SP = XPoly<Scalar>;
using RP = XPoly<Rational>;

namespace {

const Lattice<Scalar> kLat;

// Independent point-evaluation oracle on the lattice: with w = q^{1/2} and
// x(z) = (z + 1/z)/2, D_q f(x(z)) = [f(x(wz)) - f(x(z/w))] / [x(wz) - x(z/w)] and
// S_q f(x(z)) = [f(x(wz)) + f(x(z/w))]/2.
Rational xz(const Rational& z) { return (z + z.inverse()) / Rational(2); }

Rational dq_oracle(const RP& f, const Rational& w, const Rational& z) {
  Rational up = xz(w * z), dn = xz(z / w);
  return (f.eval(up) - f.eval(dn)) / (up - dn);
}

Rational sq_oracle(const RP& f, const Rational& w, const Rational& z) {
  return (f.eval(xz(w * z)) + f.eval(xz(z / w))) / Rational(2);
}

RP at(const SP& f, const Rational& u0) {
  std::vector<Rational> c;
  for (const auto& s : f.coeffs()) c.push_back(scalar_eval(s, u0));
  return RP(std::move(c));
}

// Substitutes u^2 = w in a Scalar that only involves even powers of u.
Rational at_u_squared(const Scalar& s, const Rational& w) {
  auto even_eval = [&](const UPoly& p) {
    Rational acc;
    for (long k = 0; k <= p.degree(); ++k) {
      if (p.coeff(k).is_zero()) continue;
      REQUIRE(k % 2 == 0);
      acc += p.coeff(k) * w.pow(k / 2);
    }
    return acc;
  };
  return even_eval(s.num()) / even_eval(s.den());
}

}  // namespace

TEST_CASE("lattice constants") {
  const Scalar u2 = Scalar::u_pow(2), um2 = Scalar::u_pow(-2);
  CHECK(kLat.alpha() == (u2 + um2) / Scalar(2));
  CHECK(kLat.alpha_n(0) == Scalar(1));
  CHECK(kLat.gamma_n(0) == Scalar(0));
  CHECK(kLat.gamma_n(1) == Scalar(1));
  CHECK(kLat.gamma_n(-1) == Scalar(-1));
  for (long n = 1; n <= 12; ++n) {
    CHECK(kLat.alpha_n(n + 1) == Scalar(2) * kLat.alpha() * kLat.alpha_n(n) - kLat.alpha_n(n - 1));
    CHECK(kLat.gamma_n(n + 1) == Scalar(2) * kLat.alpha() * kLat.gamma_n(n) - kLat.gamma_n(n - 1));
  }
  CHECK_THROWS_AS(Lattice<Rational>(Rational(1)), DomainError);
  CHECK_THROWS_AS(Lattice<double>(Rational(-1)), DomainError);
  CHECK(Lattice<Rational>(Rational(1, 2)).alpha() == Rational(17, 8));
}

TEST_CASE("dq examples") {
  CHECK(dq(SP(Scalar(7)), kLat).is_zero());
  CHECK(dq(SP::x(), kLat) == SP(Scalar(1)));
  const Scalar g2 = Scalar::u_pow(2) + Scalar::u_pow(-2);
  CHECK(kLat.gamma_n(2) == g2);
  CHECK(dq(SP::monomial(2), kLat) == SP::monomial(1, g2));

  const SP d3 = dq(SP::monomial(3), kLat);
  const Scalar g3 = kLat.gamma_n(3);
  CHECK(d3 == SP(std::vector<Scalar>{(Scalar(3) - g3) / Scalar(4), Scalar(0), g3}));
  // At q = 1/4 (u^2 = 1/2): (21/4) x^2 - 9/16, frozen from the point oracle below.
  CHECK(at_u_squared(d3.coeff(2), Rational(1, 2)) == Rational(21, 4));
  CHECK(at_u_squared(d3.coeff(1), Rational(1, 2)) == Rational(0));
  CHECK(at_u_squared(d3.coeff(0), Rational(1, 2)) == Rational(-9, 16));
  const RP cube(std::vector<Rational>{0, 0, 0, 1});
  for (long z : {2, 3, 5}) {
    Rational x = xz(Rational(z));
    CHECK(dq_oracle(cube, Rational(1, 2), Rational(z)) == Rational(21, 4) * x * x - Rational(9, 16));
  }
}

TEST_CASE("sq examples") {
  CHECK(sq(SP(Scalar(1)), kLat) == SP(Scalar(1)));
  CHECK(sq(SP::x(), kLat) == SP::monomial(1, kLat.alpha()));
  const Scalar a2 = kLat.alpha_n(2);
  CHECK(sq(SP::monomial(2), kLat) == SP(std::vector<Scalar>{(Scalar(1) - a2) / Scalar(2), Scalar(0), a2}));
}

TEST_CASE("u2_poly") {
  const SP u2 = u2_poly(kLat);
  const Scalar a = kLat.alpha();
  CHECK(u2.coeff(2) == a * a - Scalar(1));
  CHECK(u2.eval(Scalar(1)).is_zero());
  CHECK(u2.eval(Scalar(-1)).is_zero());
  for (const auto& c : u2.coeffs()) CHECK(scalar_eval(c, Rational(1)) == Rational(0));
}

TEST_CASE("dq_power_leading") {
  CHECK(dq_power_leading(1, kLat) == std::pair<Scalar, Scalar>{Scalar(1), Scalar(0)});
  CHECK(dq_power_leading(2, kLat) == std::pair<Scalar, Scalar>{kLat.gamma_n(2), Scalar(0)});
  CHECK(dq_power_leading(3, kLat).second == (Scalar(3) * kLat.gamma_n(1) - kLat.gamma_n(3)) / Scalar(4));
  for (long n = 0; n <= 15; ++n) {
    SP d = dq(SP::monomial(n), kLat);
    auto [g, s] = dq_power_leading(n, kLat);
    CHECK(d.coeff(n - 1) == g);
    CHECK(d.coeff(n - 2) == Scalar(0));
    CHECK(d.coeff(n - 3) == s);
    CHECK(sq(SP::monomial(n), kLat).coeff(n) == kLat.alpha_n(n));
  }
}

TEST_CASE("property: operators agree with the point oracle") {
  testing::Gen gen(31);
  const Rational u0(1, 2), w = u0 * u0;
  for (int trial = 0; trial < 15; ++trial) {
    SP f = gen.xpoly<Scalar>(8, [&] { return Scalar(gen.rational()); });
    RP df = at(dq(f, kLat), u0), sf = at(sq(f, kLat), u0), fr = at(f, u0);
    for (long z : {3, 7}) {
      Rational x = xz(Rational(z));
      CHECK(df.eval(x) == dq_oracle(fr, w, Rational(z)));
      CHECK(sf.eval(x) == sq_oracle(fr, w, Rational(z)));
    }
  }
}

TEST_CASE("property: product rules, linearity, and numeric agreement") {
  testing::Gen gen(2718);
  const SP u2 = u2_poly(kLat);
  auto coef = [&] { return Scalar(gen.rational()); };
  for (int trial = 0; trial < 20; ++trial) {
    SP f = gen.xpoly<Scalar>(8, coef), g = gen.xpoly<Scalar>(8, coef);
    CHECK(dq(f * g, kLat) == dq(f, kLat) * sq(g, kLat) + sq(f, kLat) * dq(g, kLat));
    CHECK(sq(f * g, kLat) == dq(f, kLat) * dq(g, kLat) * u2 + sq(f, kLat) * sq(g, kLat));
    Scalar k = gen.scalar(2);
    CHECK(dq(f * k + g, kLat) == dq(f, kLat) * k + dq(g, kLat));
    CHECK(sq(f * k + g, kLat) == sq(f, kLat) * k + sq(g, kLat));

    const Rational u0(1, 2);
    Lattice<Rational> rl(u0);
    CHECK(dq(at(f, u0), rl) == at(dq(f, kLat), u0));
    CHECK(sq(at(f, u0), rl) == at(sq(f, kLat), u0));
  }
}
