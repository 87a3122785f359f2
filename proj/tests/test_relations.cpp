#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "awq/relations.hpp"
#include "random_scalars.hpp"

using namespace awq;
using SP = XPoly<Scalar>;

namespace {

const Lattice<Scalar> kLat;

Scalar q(long k4) { return Scalar::u_pow(k4); }  // q^{k4/4}

RelationCoeffs<Scalar> fitted(const FitResult<Scalar>& r) {
  REQUIRE(std::holds_alternative<RelationCoeffs<Scalar>>(r));
  return std::get<RelationCoeffs<Scalar>>(r);
}

SystemSequences<Scalar> zero_relation_u() {
  auto spec = chebyshev_U<Scalar>();
  auto z = Seq<Scalar>::constant(Scalar(0));
  return {spec.b_seq, spec.c_seq, z, z, z};
}

}  // namespace

TEST_CASE("fit: chebyshev T with pi = 1") {
  auto fam = generate(chebyshev_T<Scalar>(), 16);
  const auto& rel = fitted(fit_s_relation(fam, SP(Scalar(1)), kLat));
  for (long n = 0; n < 16; ++n) {
    CHECK(rel.a(n) == Scalar(0));
    CHECK(rel.b(n) == kLat.alpha_n(n));
    CHECK(rel.c(n) == Scalar(0));
  }
  CHECK_FALSE(rel.a.defined(16));
}

TEST_CASE("fit: al-salam-chihara theorem instance") {
  auto [spec, closed] = theorem1_family(Theorem1Kind::AlSalamChihara, 1, kLat);
  auto fam = generate(spec, 8);
  const auto& rel = fitted(fit_s_relation(fam, SP(Scalar(1)), kLat));
  for (long n = 1; n < 8; ++n)
    CHECK(rel.c(n) == (Scalar(1) - q(4 * n)) * (Scalar(1) - q(4 * n - 2)) / (Scalar(4) * q(2 * n)));
  CHECK(compare_relations(rel, closed, 0, 7).all_zero());
}

TEST_CASE("fit: chebyshev U fails at n = 2 on the constant term") {
  auto fam = generate(chebyshev_U<Scalar>(), 6);
  auto res = fit_s_relation(fam, SP(Scalar(1)), kLat);
  REQUIRE(std::holds_alternative<FitFailure<Scalar>>(res));
  const auto& f = std::get<FitFailure<Scalar>>(res);
  CHECK(f.n == 2);
  CHECK(f.degrees == std::vector<long>{0});
  CHECK(f.coefficients[0] == (Scalar(1) - kLat.alpha_n(2)) / Scalar(4));
}

TEST_CASE("fit: chebyshev T with pi = x - c") {
  const Scalar c = Scalar::parse("1/3");
  auto fam = generate(chebyshev_T<Scalar>(), 10);
  const auto& rel = fitted(fit_s_relation(fam, parse_xpoly("x - 1/3"), kLat));
  for (long n = 0; n < 10; ++n) {
    CHECK(rel.a(n) == kLat.alpha_n(n));
    CHECK(rel.b(n) == -kLat.alpha_n(n) / Scalar(3));
    CHECK(rel.c(n) == Scalar(0));
  }
  CHECK(compare_relations(rel, theorem2_chebyshev(c, kLat).second, 0, 9).all_zero());
}

TEST_CASE("fit: preconditions") {
  auto fam = generate(chebyshev_T<Scalar>(), 4);
  CHECK_THROWS_AS(fit_s_relation(fam, parse_xpoly("x^2"), kLat), DomainError);
  CHECK_THROWS_AS(fit_s_relation(generate(chebyshev_T<Scalar>(), 1), SP(Scalar(1)), kLat), DomainError);
}

TEST_CASE("five-term coefficients: chebyshev T, pi = 1") {
  auto [spec, rel] = theorem1_family(Theorem1Kind::ChebyshevT, 1, kLat);
  const Scalar al = kLat.alpha();
  for (long n = 0; n <= 12; ++n) {
    auto r = dq_five_term_coeffs(rel, spec, n, kLat);
    CHECK(r.r1 == Scalar(0));
    CHECK(r.r3 == Scalar(0));
    CHECK(r.r5 == Scalar(0));
    CHECK(r.r2 == (al * al - Scalar(1)) * kLat.gamma_n(n));
    CHECK(r.r2 == al * kLat.alpha_n(n) - kLat.alpha_n(n - 1));
    CHECK(r.r4 == -(al * al - Scalar(1)) * kLat.gamma_n(n) * spec.C(n));
  }
}

TEST_CASE("five-term coefficients: a = 0 relations") {
  auto [spec, rel] = theorem1_family(Theorem1Kind::AlSalamChihara, 1, kLat);
  const Scalar al = kLat.alpha();
  for (long n = 1; n <= 6; ++n) {
    auto r = dq_five_term_coeffs(rel, spec, n, kLat);
    CHECK(r.r1 == Scalar(0));
    const Scalar cprev = n == 1 ? Scalar(0) : rel.c(n - 1);
    CHECK(r.r5 == cprev * spec.C(n) - al * rel.c(n) * spec.C(n - 1));
  }
}

TEST_CASE("five-term relation holds on known solutions") {
  {
    auto [spec, rel] = theorem1_family(Theorem1Kind::ChebyshevT, 1, kLat);
    auto fam = generate(spec, 18);
    CHECK(verify_dq_five_term(fam, rel, 16, kLat).report.all_zero());
    // (x^2 - 1) D_q T_n = gamma_n (T_{n+1} - C_n T_{n-1}), with C_n = 1/4 from n = 2.
    const SP x2m1 = parse_xpoly("x^2 - 1");
    for (long n = 2; n <= 16; ++n)
      CHECK(x2m1 * dq(fam.polys[n], kLat) ==
            (fam.polys[n + 1] - fam.polys[n - 1] * Scalar::parse("1/4")) * kLat.gamma_n(n));
    CHECK(x2m1 * dq(fam.polys[1], kLat) == (fam.polys[2] - fam.polys[0] * Scalar::parse("1/2")));
  }
  for (int sigma : {1, -1}) {
    for (auto kind : {Theorem1Kind::AlSalamChihara, Theorem1Kind::ContDualQHahn}) {
      auto [spec, rel] = theorem1_family(kind, sigma, kLat);
      auto fam = generate(spec, 8);
      CHECK(verify_dq_five_term(fam, rel, 6, kLat).report.all_zero());
    }
  }
  auto [spec, rel] = theorem2_chebyshev(Scalar::parse("-2/7"), kLat);
  CHECK(verify_dq_five_term(generate(spec, 10), rel, 8, kLat).report.all_zero());
}

TEST_CASE("five-term relation: counterexample shape and locality") {
  auto [spec, rel] = theorem1_family(Theorem1Kind::ContDualQHahn, 1, kLat);
  auto fam = generate(spec, 8);
  auto chk = verify_dq_five_term(fam, rel, 6, kLat);
  CHECK(chk.report.all_zero());
  for (long n = 2; n <= 6; ++n) {
    const auto& r = chk.coeffs[n];
    CHECK(r.r1 == Scalar(0));
    CHECK_FALSE(r.r2.is_zero());
    CHECK_FALSE(r.r3.is_zero());
    CHECK_FALSE(r.r4.is_zero());
    CHECK_FALSE(r.r5.is_zero());
  }

  RelationCoeffs<Scalar> bad = rel;
  bad.c = rel.c.with(3, rel.c(3) + Scalar(1));
  auto rep = verify_dq_five_term(fam, bad, 6, kLat).report;
  CHECK(rep.nonzero_at("dq-five-term") == std::vector<long>{2, 3, 4});

  CHECK_THROWS_AS(verify_dq_five_term(fam, rel, 7, kLat), DomainError);
}

TEST_CASE("difference system on the theorem-1 families") {
  for (int sigma : {1, -1}) {
    for (auto kind : {Theorem1Kind::AlSalamChihara, Theorem1Kind::ContDualQHahn}) {
      auto [spec, rel] = theorem1_family(kind, sigma, kLat);
      auto rep = system_residuals(system_sequences(spec, rel, kLat), 2, 8, kLat);
      CHECK(rep.all_zero());
      CHECK(rep.count(Status::NotEvaluated) == 0);
      CHECK(rep.entries.size() == 10 * 7);
    }
  }
}

TEST_CASE("difference system: standing assumption") {
  auto [spec, rel] = theorem1_family(Theorem1Kind::ChebyshevT, 1, kLat);
  auto seqs = system_sequences(spec, rel, kLat);
  try {
    system_residuals(seqs, 2, 6, kLat);
    FAIL("expected the standing assumption to trip");
  } catch (const StandingAssumptionError& e) {
    CHECK(e.index() == 0);
  }
  SystemOptions waive;
  waive.enforce_standing_assumption = false;
  auto rep = system_residuals(seqs, 2, 6, kLat, waive);
  CHECK(rep.all_zero());
  CHECK(rep.notes.size() == 1);
}

TEST_CASE("difference system: chebyshev U solves it without being a relation solution") {
  SystemOptions waive;
  waive.enforce_standing_assumption = false;
  auto rep = system_residuals(zero_relation_u(), 2, 12, kLat, waive);
  CHECK(rep.all_zero());
  CHECK(rep.count(Status::Zero) == rep.entries.size());
}

TEST_CASE("difference system: locality and range handling") {
  auto [spec, rel] = theorem1_family(Theorem1Kind::AlSalamChihara, 1, kLat);
  auto seqs = system_sequences(spec, rel, kLat);
  seqs.C = seqs.C.with(5, spec.C(5) + Scalar(1));
  auto rep = system_residuals(seqs, 2, 10, kLat);
  auto bad = rep.nonzero_at("eq4S");
  CHECK_FALSE(bad.empty());
  CHECK(std::all_of(bad.begin(), bad.end(), [](long n) { return n >= 3 && n <= 7; }));
  for (const auto& e : rep.entries)
    if (e.status == Status::Nonzero) CHECK((e.n >= 2 && e.n <= 7));

  // Fitted tables have no a_{-1}: eq4S at n = 2 cannot be evaluated.
  auto fam = generate(spec, 12);
  const auto& fit = fitted(fit_s_relation(fam, SP(Scalar(1)), kLat));
  auto fseq = system_sequences(spec, fit, kLat);
  auto frep = system_residuals(fseq, 2, 8, kLat);
  CHECK(frep.all_zero());
  REQUIRE(frep.find("eq4S", 2) != nullptr);
  CHECK(frep.find("eq4S", 2)->status == Status::NotEvaluated);
  CHECK(frep.find("eq4S", 3)->status == Status::Zero);
  CHECK_THROWS_AS(system_residuals(fseq, 2, 9, kLat), DomainError);
}

TEST_CASE("seq7S c-terms equal (1 - 2 alpha)(c_n + c_{n+1})") {
  testing::Gen g(7);
  const Scalar al = kLat.alpha();
  for (int i = 0; i < 25; ++i) {
    const Scalar cn = g.scalar(), cn1 = g.scalar();
    CHECK(detail::seq7_c_terms(cn, cn1, al) == (Scalar(1) - Scalar(2) * al) * (cn + cn1));
  }
}

TEST_CASE("power constraints") {
  {
    auto [spec, rel] = theorem1_family(Theorem1Kind::ChebyshevT, 1, kLat);
    CHECK(power_constraints(rel, spec, 16, kLat).all_zero());
  }
  {
    auto [spec, rel] = theorem2_chebyshev(Scalar::parse("5/2"), kLat);
    CHECK(power_constraints(rel, spec, 16, kLat).all_zero());
  }
  for (int sigma : {1, -1})
    for (auto kind : {Theorem1Kind::AlSalamChihara, Theorem1Kind::ContDualQHahn}) {
      auto [spec, rel] = theorem1_family(kind, sigma, kLat);
      CHECK(power_constraints(rel, spec, 10, kLat).all_zero());
    }
  auto [spec, rel] = theorem1_family(Theorem1Kind::ChebyshevT, 1, kLat);
  rel.pi = SP(Scalar(2));
  CHECK_THROWS_AS(power_constraints(rel, spec, 4, kLat), DomainError);
  rel.pi = parse_xpoly("2*x - 1");
  CHECK_THROWS_AS(power_constraints(rel, spec, 4, kLat), DomainError);
}

TEST_CASE("t fit") {
  {
    auto [spec, rel] = theorem1_family(Theorem1Kind::ChebyshevT, 1, kLat);
    auto t = t_fit(system_sequences(spec, rel, kLat), 12, kLat);
    CHECK(t.k1 == Scalar(0));
    CHECK(t.k2 == Scalar(0));
  }
  for (int sigma : {1, -1}) {
    const Scalar s(sigma);
    auto [asc, arel] = theorem1_family(Theorem1Kind::AlSalamChihara, sigma, kLat);
    auto ta = t_fit(system_sequences(asc, arel, kLat), 12, kLat);
    CHECK(ta.k1 == Scalar(0));
    CHECK(ta.k2 == s);  // t_n = sigma q^{-n/2}: c_n/C_n carries no factor 4
    auto [cd, crel] = theorem1_family(Theorem1Kind::ContDualQHahn, sigma, kLat);
    auto tc = t_fit(system_sequences(cd, crel, kLat), 12, kLat);
    CHECK(tc.k1 == Scalar(0));
    CHECK(tc.k2 == s * q(1));
  }
  auto [spec, rel] = theorem1_family(Theorem1Kind::AlSalamChihara, 1, kLat);
  auto seqs = system_sequences(spec, rel, kLat);
  seqs.c = seqs.c.with(4, seqs.c(4) * Scalar(2));
  try {
    t_fit(seqs, 8, kLat);
    FAIL("expected a structure violation");
  } catch (const StructureViolation& e) {
    CHECK(e.index() == 4);
  }
  CHECK(t_fit_check(seqs, 8, kLat).check.nonzero_at("t_n=k1*q^(n/2)+k2*q^(-n/2)") == std::vector<long>{4});
}

TEST_CASE("uniqueness product") {
  for (int sigma : {1, -1})
    for (auto kind : {Theorem1Kind::ChebyshevT, Theorem1Kind::AlSalamChihara, Theorem1Kind::ContDualQHahn}) {
      auto [spec, rel] = theorem1_family(kind, sigma, kLat);
      CHECK(uniqueness_product(system_sequences(spec, rel, kLat), kLat) == Scalar(0));
    }
  testing::Gen g(11);
  for (int i = 0; i < 10; ++i) {
    SystemSequences<Scalar> s{Seq<Scalar>::constant(Scalar(0)),
                              Seq<Scalar>::table({Scalar(0), g.nonzero_scalar(), g.nonzero_scalar()}),
                              Seq<Scalar>::constant(Scalar(0)), Seq<Scalar>::constant(Scalar(0)),
                              Seq<Scalar>::table({Scalar(0), g.nonzero_scalar(), g.nonzero_scalar()})};
    CHECK_FALSE(uniqueness_product(s, kLat).is_zero());
  }
}

TEST_CASE("initial conditions") {
  for (int sigma : {1, -1})
    for (auto kind : {Theorem1Kind::ChebyshevT, Theorem1Kind::AlSalamChihara, Theorem1Kind::ContDualQHahn}) {
      auto [spec, rel] = theorem1_family(kind, sigma, kLat);
      auto rep = initial_residuals(InitialCase::Pi1, system_sequences(spec, rel, kLat), Scalar(0), kLat);
      CHECK(rep.all_zero());
      CHECK(rep.entries.size() == 3);
    }

  auto u = initial_residuals(InitialCase::Pi1, zero_relation_u(), Scalar(0), kLat);
  CHECK(u.find("C1-first-case", 0)->values[0] == (kLat.alpha() + Scalar(1)) * Scalar::parse("-1/2"));
  const Lattice<Rational> half(Rational(1, 2));
  auto ur = initial_residuals(InitialCase::Pi1, SystemSequences<Rational>{chebyshev_U<Rational>().b_seq,
                                                                        chebyshev_U<Rational>().c_seq,
                                                                        Seq<Rational>::constant(Rational(0)),
                                                                        Seq<Rational>::constant(Rational(0)),
                                                                        Seq<Rational>::constant(Rational(0))},
                              Rational(0), half);
  CHECK(ur.find("C1-first-case", 0)->values[0] == Rational(-25, 16));

  testing::Gen g(3);
  for (int i = 0; i < 5; ++i) {
    const Scalar c(g.rational());
    auto [spec, rel] = theorem2_chebyshev(c, kLat);
    auto rep = initial_residuals(InitialCase::PiDeg1, system_sequences(spec, rel, kLat), c, kLat);
    CHECK(rep.all_zero());
    CHECK(rep.count(Status::Zero) == 6);
  }
  // Away from B_0 = 0 the C_1 + C_2 identity is not claimed.
  auto [spec, rel] = theorem1_family(Theorem1Kind::AlSalamChihara, 1, kLat);
  auto rep = initial_residuals(InitialCase::PiDeg1, system_sequences(spec, rel, kLat), Scalar(0), kLat);
  CHECK(rep.find("C1+C2=3/4", 0)->status == Status::NotEvaluated);
}

TEST_CASE("candidate sequences solve the B and C recurrences") {
  testing::Gen g(5);
  for (int i = 0; i < 3; ++i) {
    CandidateParams<Scalar> p;
    p.B0 = Scalar(g.rational());
    p.Kb = Scalar(g.rational());
    p.r = Scalar(g.rational()) * q(1);
    p.k2 = Scalar(1);
    const long N = 10;
    auto seq = candidate_case1(p, N, kLat);
    auto r = Seq<Scalar>::formula([&](long n) { return q(-2 * n) * (Scalar(1) - p.r * q(4 * n)); });
    auto rep = recurrence_residuals(r, Seq<Scalar>::table(seq.B), Seq<Scalar>::table(seq.C), 0, 6, kLat);
    CHECK(rep.nonzero_at("eq3S").empty());
  }

  CandidateParams<Scalar> p;
  p.a = q(1);
  p.b = q(3);
  REQUIRE(case2_constraint(p.a, p.b, kLat) == Scalar(0));
  auto c2 = candidate_theorem2(Theorem2Case::Case2, p, 12, kLat);
  auto r2 = Seq<Scalar>::formula([](long n) { return q(-2 * n); });
  CHECK(recurrence_residuals(r2, Seq<Scalar>::table(c2.B), Seq<Scalar>::table(c2.C), 2, 8, kLat).all_zero());

  p.a = Scalar::parse("1/3*u");
  p.b = Scalar::parse("2/5");
  const Scalar ab = p.a * p.b;
  auto c3 = candidate_theorem2(Theorem2Case::Case3, p, 12, kLat);
  auto r3 = Seq<Scalar>::formula([ab](long n) { return q(-2 * n) * (Scalar(1) - ab * q(4 * n)); });
  CHECK(recurrence_residuals(r3, Seq<Scalar>::table(c3.B), Seq<Scalar>::table(c3.C), 2, 8, kLat).all_zero());
}

TEST_CASE("numeric modes agree") {
  const Rational u0(1, 2);
  const Lattice<Rational> rl(u0);
  const Lattice<double> fl(u0);
  for (auto kind : {Theorem1Kind::AlSalamChihara, Theorem1Kind::ContDualQHahn}) {
    auto [rs, rr] = theorem1_family(kind, 1, rl);
    CHECK(system_residuals(system_sequences(rs, rr, rl), 2, 12, rl).all_zero());
    CHECK(verify_dq_five_term(generate(rs, 18), rr, 16, rl).report.all_zero());
    auto [fs, fr] = theorem1_family(kind, 1, fl);
    auto frep = system_residuals(system_sequences(fs, fr, fl), 2, 12, fl);
    CHECK(frep.all_zero());
    auto fchk = verify_dq_five_term(generate(fs, 18), fr, 16, fl);
    CHECK(fchk.report.all_zero());
  }
}
