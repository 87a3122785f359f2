#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awq/families.hpp"

using namespace awq;
using SP = XPoly<Scalar>;

namespace {

const Lattice<Scalar> kLat;

Scalar q(long k4) { return Scalar::u_pow(k4); }  // q^{k4/4}

SP px(const char* text) { return parse_xpoly(text); }

}  // namespace

TEST_CASE("generate: small examples") {
  CHECK(generate(chebyshev_T<Scalar>(), 2).polys[2] == px("x^2 - 1/2"));
  CHECK(generate(chebyshev_U<Scalar>(), 2).polys[2] == px("x^2 - 1/4"));
  CHECK(generate(chebyshev_T<Scalar>(), 4).polys[4] == px("x^4 - x^2 + 1/8"));

  const Scalar c = Scalar::parse("1/3"), d = Scalar::parse("u^2");
  auto asc = generate(al_salam_chihara(c, d, Base::Q, kLat), 1);
  CHECK(asc.polys[1] == SP({-(c + d) / Scalar(2), Scalar(1)}));

  auto p0 = generate(chebyshev_T<Scalar>(), 0);
  CHECK(p0.horizon == 0);
  CHECK(p0.polys[0] == SP(Scalar(1)));
}

TEST_CASE("generate: breakdown names the index") {
  TTRRSpec<Scalar> bad{"bad", Seq<Scalar>::constant(Scalar(0)),
                       Seq<Scalar>::formula([](long n) { return n == 3 ? Scalar(0) : Scalar(1); })};
  CHECK_NOTHROW(generate(bad, 2));
  try {
    generate(bad, 5);
    FAIL("expected breakdown");
  } catch (const BreakdownError& e) {
    CHECK(e.index() == 3);
  }
  // cd = 1 makes C_1 = (1 - cd)(1 - q)/4 vanish even for formal u.
  auto asc = al_salam_chihara(Scalar(1), Scalar(1), Base::Q, kLat);
  CHECK(asc.C(2) != Scalar(0));
  try {
    generate(asc, 8);
    FAIL("expected breakdown");
  } catch (const BreakdownError& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("chebyshev coefficient functions") {
  CHECK(chebyshev_T<Scalar>().B(5) == Scalar(0));
  CHECK(chebyshev_T<Scalar>().C(1) == Scalar::parse("1/2"));
  CHECK(chebyshev_T<Scalar>().C(2) == Scalar::parse("1/4"));
  CHECK(chebyshev_U<Scalar>().C(1) == Scalar::parse("1/4"));
  CHECK(chebyshev_U<Scalar>().C(0) == Scalar(0));
}

TEST_CASE("al-salam-chihara coefficients") {
  auto s = al_salam_chihara(Scalar(1), q(2), Base::Q, kLat);
  for (long n = 0; n <= 6; ++n) {
    CHECK(s.B(n) == (Scalar(1) + q(2)) * q(4 * n) / Scalar(2));
    if (n > 0) CHECK(s.C(n) == (Scalar(1) - q(4 * n)) * (Scalar(1) - q(4 * n - 2)) / Scalar(4));
  }
  auto z = al_salam_chihara(Scalar(0), Scalar(0), Base::Q, kLat);
  for (long n = 1; n <= 4; ++n) CHECK(z.C(n) == (Scalar(1) - q(4 * n)) / Scalar(4));

  auto h = al_salam_chihara(Scalar(1), Scalar(2), Base::QHalf, kLat);
  CHECK(h.B(3) == Scalar(3) * q(6) / Scalar(2));
}

TEST_CASE("continuous dual q-hahn coefficients") {
  CHECK_THROWS_AS(cont_dual_q_hahn(Scalar(0), Scalar(1), Scalar(1), Base::Q, kLat), DomainError);

  for (int sigma : {1, -1}) {
    const Scalar s(sigma);
    auto spec = cont_dual_q_hahn(s, -s, s * q(1), Base::QHalf, kLat);
    for (long n = 1; n <= 8; ++n) {
      CHECK(spec.C(n) == (Scalar(1) + q(2 * n - 2)) * (Scalar(1) - q(2 * n)) * (Scalar(1) - q(4 * n - 2)) /
                             Scalar(4));
    }
    for (long n = 0; n <= 8; ++n) {
      CHECK(spec.B(n) ==
            s / Scalar(2) * ((Scalar(1) + q(-2)) * q(2 * n) + Scalar(1) - q(-2)) * q(2 * n + 1));
    }
  }

  // b = c = 0 leaves B_n = a p^n / 2 and C_n = (1 - p^n)/4.
  const Scalar a = Scalar::parse("2/3*u");
  auto spec = cont_dual_q_hahn(a, Scalar(0), Scalar(0), Base::Q, kLat);
  for (long n = 0; n <= 5; ++n) {
    CHECK(spec.B(n) == a * q(4 * n) / Scalar(2));
    if (n > 0) CHECK(spec.C(n) == (Scalar(1) - q(4 * n)) / Scalar(4));
  }
}

TEST_CASE("theorem-1 relation coefficients") {
  auto [t, trel] = theorem1_family(Theorem1Kind::ChebyshevT, 1, kLat);
  for (long n = 0; n <= 6; ++n) {
    CHECK(trel.a(n) == Scalar(0));
    CHECK(trel.b(n) == kLat.alpha_n(n));
    CHECK(trel.c(n) == Scalar(0));
  }
  CHECK(trel.pi == SP(Scalar(1)));

  auto [asc, arel] = theorem1_family(Theorem1Kind::AlSalamChihara, 1, kLat);
  for (long n = 1; n <= 6; ++n) {
    CHECK(arel.c(n) == (Scalar(1) - q(4 * n)) * (Scalar(1) - q(4 * n - 2)) / (Scalar(4) * q(2 * n)));
    CHECK(asc.C(n) == (Scalar(1) - q(4 * n)) * (Scalar(1) - q(4 * n - 2)) / Scalar(4));
  }

  auto [cd, crel] = theorem1_family(Theorem1Kind::ContDualQHahn, -1, kLat);
  for (long n = 1; n <= 6; ++n) {
    CHECK(crel.c(n) == -(Scalar(1) - q(2 * n)) * (Scalar(1) - q(4 * n - 2)) * (Scalar(1) + q(2 * n - 2)) /
                           (Scalar(4) * q(2 * n - 1)));
  }
  CHECK_THROWS_AS(theorem1_family(Theorem1Kind::ChebyshevT, 0, kLat), DomainError);
}

TEST_CASE("theorem-2 chebyshev relation coefficients") {
  auto [spec, rel] = theorem2_chebyshev(Scalar(1), kLat);
  for (long n = 0; n <= 6; ++n) {
    CHECK(rel.a(n) == kLat.alpha_n(n));
    CHECK(rel.b(n) == -kLat.alpha_n(n));
    CHECK(rel.c(n) == Scalar(0));
  }
  CHECK(rel.pi == px("x - 1"));
}

TEST_CASE("candidate case 1") {
  const Scalar B0 = Scalar::parse("3/7"), r = Scalar::parse("2/5*u");
  CandidateParams<Scalar> p;
  p.B0 = B0;
  p.r = r;
  p.k2 = Scalar(1);
  auto seq = candidate_case1(p, 6, kLat);
  for (long n = 0; n <= 6; ++n)
    CHECK(seq.B[n] == B0 * (Scalar(1) - r * q(4)) * (Scalar(1) - r) * q(4 * n) /
                          ((Scalar(1) - r * q(4 * n)) * (Scalar(1) - r * q(4 * n + 4))));

  p.r = Scalar(0);
  seq = candidate_case1(p, 6, kLat);
  for (long n = 0; n <= 6; ++n) CHECK(seq.B[n] == B0 * q(4 * n));
  CHECK(seq.C[0] == Scalar(0));
  CHECK(seq.c[0] == Scalar(0));

  // r = q^{-2} makes 1 - r q^n vanish at n = 2.
  p.r = q(-8);
  try {
    candidate_case1(p, 4, kLat);
    FAIL("expected breakdown");
  } catch (const BreakdownError& e) {
    CHECK(e.index() == 1);  // 1 - r q^{n+1} is already zero at n = 1
  }
  p.r = Scalar(0);
  p.k2 = Scalar(0);
  CHECK_THROWS_AS(candidate_case1(p, 2, kLat), BreakdownError);
}

TEST_CASE("candidate case 1 reproduces the theorem-1 families") {
  const long N = 10;
  for (int sigma : {1, -1}) {
    const Scalar s(sigma);
    {
      auto [spec, rel] = theorem1_family(Theorem1Kind::AlSalamChihara, sigma, kLat);
      CandidateParams<Scalar> p;
      p.B0 = s * (Scalar(1) + q(2)) / Scalar(2);
      p.k2 = s;
      auto seq = candidate_case1(p, N, kLat);
      for (long n = 0; n <= N; ++n) {
        CHECK(seq.B[n] == spec.B(n));
        CHECK(seq.C[n] == spec.C(n));
        CHECK(seq.c[n] == (n == 0 ? Scalar(0) : rel.c(n)));
      }
      // With k_2 = 4 sigma every C_n comes out a quarter of the family's value.
      p.k2 = Scalar(4) * s;
      auto off = candidate_case1(p, 3, kLat);
      CHECK(off.C[2] == spec.C(2) / Scalar(4));
    }
    {
      auto [spec, rel] = theorem1_family(Theorem1Kind::ContDualQHahn, sigma, kLat);
      CandidateParams<Scalar> p;
      p.B0 = s * q(1);
      p.Kb = s / Scalar(2) * q(1) * (Scalar(1) - q(-2));
      p.k2 = s * q(1);
      CHECK(candidate_kb(spec.B(0), spec.B(1), p.r, kLat) == p.Kb);
      auto seq = candidate_case1(p, N, kLat);
      for (long n = 0; n <= N; ++n) {
        CHECK(seq.B[n] == spec.B(n));
        CHECK(seq.C[n] == spec.C(n));
        CHECK(seq.c[n] == (n == 0 ? Scalar(0) : rel.c(n)));
      }
    }
  }
}

TEST_CASE("candidate theorem-2 sequences") {
  CandidateParams<Scalar> p;
  auto z = candidate_theorem2(Theorem2Case::Case2, p, 5, kLat);
  for (long n = 0; n <= 5; ++n) CHECK(z.B[n] == Scalar(0));
  for (long n = 0; n < 5; ++n) CHECK(z.C[n + 1] == (Scalar(1) - q(4 * n + 4)) / Scalar(4));

  CHECK(case2_constraint(q(1), q(3), kLat) == Scalar(0));
  CHECK_FALSE(case2_constraint(q(1), q(2), kLat) == Scalar(0));

  p.a = p.b = Scalar::parse("1/2*u");
  auto c3 = candidate_theorem2(Theorem2Case::Case3, p, 5, kLat);
  const Scalar a2 = p.a * p.a;
  for (long n = 0; n < 5; ++n) {
    const Scalar qn1 = q(4 * n + 4);
    const Scalar num = (Scalar(1) - qn1) * (Scalar(1) - a2 * qn1) * (Scalar(1) - a2 * qn1) *
                       (Scalar(1) - a2 * a2 * qn1);
    const Scalar den = Scalar(4) * (Scalar(1) - a2 * q(4 * n + 2)) * (Scalar(1) - a2 * qn1) *
                       (Scalar(1) - a2 * qn1) * (Scalar(1) - a2 * q(4 * n + 6));
    CHECK(c3.C[n + 1] == num / den);
    CHECK(c3.B[n] == Scalar(0));  // a = b kills B_n
  }
  p.a = Scalar(1);
  p.b = Scalar(1);
  CHECK_THROWS_AS(candidate_theorem2(Theorem2Case::Case3, p, 2, kLat), BreakdownError);
}

TEST_CASE("property: recurrence holds on the stored polynomials") {
  for (int sigma : {1, -1}) {
    for (auto kind : {Theorem1Kind::ChebyshevT, Theorem1Kind::AlSalamChihara, Theorem1Kind::ContDualQHahn}) {
      auto fam = generate(theorem1_family(kind, sigma, kLat).first, 10);
      CHECK(ttrr_violation(fam) == -1);
      for (long n = 0; n <= 10; ++n) CHECK(fam.polys[n].degree() == n);
    }
  }
  auto fam = generate(chebyshev_U<Scalar>(), 6);
  CHECK(ttrr_violation(fam) == -1);
}

TEST_CASE("property: dq T_n = gamma_n U_{n-1}") {
  const long N = 32;
  auto t = generate(chebyshev_T<Scalar>(), N);
  auto u = generate(chebyshev_U<Scalar>(), N);
  CHECK(dq(t.polys[0], kLat).is_zero());
  for (long n = 1; n <= N; ++n) CHECK(dq(t.polys[n], kLat) == u.polys[n - 1] * kLat.gamma_n(n));
}

TEST_CASE("numeric fields agree with the formal family") {
  const Rational u0(1, 2);
  const Lattice<Rational> rlat(u0);
  const Lattice<double> flat(u0);
  auto formal = generate(theorem1_family(Theorem1Kind::ContDualQHahn, 1, kLat).first, 8);
  auto exact = generate(theorem1_family(Theorem1Kind::ContDualQHahn, 1, rlat).first, 8);
  auto fl = generate(theorem1_family(Theorem1Kind::ContDualQHahn, 1, flat).first, 8);
  for (long n = 0; n <= 8; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Rational want = scalar_eval(formal.polys[n].coeff(k), u0);
      CHECK(exact.polys[n].coeff(k) == want);
      CHECK(fl.polys[n].coeff(k) == doctest::Approx(want.to_double()).epsilon(1e-12));
    }
  }
}
