#pragma once

#include <string>
#include <utility>
#include <vector>

#include "awq/qcalc.hpp"
#include "awq/sequence.hpp"

namespace awq {

/// Recurrence data x P_n = P_{n+1} + B_n P_n + C_n P_{n-1} of a monic OPS.
/// C is forced to 0 at n = 0.
template <class F>
struct TTRRSpec {
  std::string label;
  Seq<F> b_seq;
  Seq<F> c_seq;

  F B(long n) const { return b_seq(n); }
  F C(long n) const { return n == 0 ? F(0) : c_seq(n); }
};

template <class F>
struct FamilyInstance {
  TTRRSpec<F> spec;
  MonicBasis<F> polys;
  long horizon = 0;
};

/// Monic P_0..P_N from the recurrence. Throws BreakdownError naming the first
/// n in 1..N with C(n) = 0.
template <class F>
FamilyInstance<F> generate(const TTRRSpec<F>& spec, long N) {
  if (N < 0) throw DomainError("generate: horizon must be nonnegative");
  for (long n = 1; n <= N; ++n)
    if (FieldTraits<F>::is_zero(spec.C(n)))
      throw BreakdownError(n, spec.label + ": C_" + std::to_string(n) + " = 0, the recurrence breaks down");
  std::vector<XPoly<F>> p{XPoly<F>(F(1))};
  for (long n = 0; n < N; ++n) {
    XPoly<F> next = p[n].times_x() - p[n] * spec.B(n);
    if (n > 0) next -= p[n - 1] * spec.C(n);
    p.push_back(std::move(next));
  }
  return {spec, MonicBasis<F>(std::move(p)), N};
}

/// Largest n with x P_n - P_{n+1} - B_n P_n - C_n P_{n-1} != 0 recomputed from
/// the stored polynomials, or -1 when the recurrence holds everywhere.
template <class F>
long ttrr_violation(const FamilyInstance<F>& fam, double tol = kDefaultFloatTol) {
  long bad = -1;
  for (long n = 0; n < fam.horizon; ++n) {
    XPoly<F> lhs = fam.polys[n].times_x();
    XPoly<F> res = lhs - fam.polys[n + 1] - fam.polys[n] * fam.spec.B(n);
    if (n > 0) res -= fam.polys[n - 1] * fam.spec.C(n);
    const double scale = lhs.magnitude();
    for (const auto& c : res.coeffs())
      if (!negligible<F>(c, scale, tol)) bad = n;
  }
  return bad;
}

/// Exponent base for the q-families: q itself or q^{1/2}.
enum class Base { Q, QHalf };

/// p^n for p = q (u^4) or p = q^{1/2} (u^2).
template <class F>
F base_pow(const Lattice<F>& lat, Base base, long n) {
  return lat.u_pow((base == Base::Q ? 4 : 2) * n);
}

template <class F>
TTRRSpec<F> chebyshev_T() {
  return {"chebyshev-t", Seq<F>::constant(F(0)),
          Seq<F>::formula([](long n) { return n == 1 ? F(1) / F(2) : F(1) / F(4); }, 0)};
}

template <class F>
TTRRSpec<F> chebyshev_U() {
  return {"chebyshev-u", Seq<F>::constant(F(0)), Seq<F>::formula([](long) { return F(1) / F(4); }, 0)};
}

/// Monic Al-Salam-Chihara: B_n = (c+d)p^n/2, C_n = (1 - cd p^{n-1})(1 - p^n)/4.
template <class F>
TTRRSpec<F> al_salam_chihara(const F& c, const F& d, Base base, const Lattice<F>& lat) {
  auto B = [=](long n) { return (c + d) * base_pow(lat, base, n) / F(2); };
  auto C = [=](long n) {
    return (F(1) - c * d * base_pow(lat, base, n - 1)) * (F(1) - base_pow(lat, base, n)) / F(4);
  };
  return {"asc", Seq<F>::formula(B, 0), Seq<F>::formula(C, 0)};
}

/// Monic continuous dual q-Hahn with parameters (a, b, c) in base p:
/// B_n = (a + 1/a - a(1 - p^n)(1 - bc p^{n-1}) - (1 - ab p^n)(1 - ac p^n)/a)/2,
/// C_{n+1} = (1 - ab p^n)(1 - ac p^n)(1 - bc p^n)(1 - p^{n+1})/4.
/// Throws DomainError for a = 0.
template <class F>
TTRRSpec<F> cont_dual_q_hahn(const F& a, const F& b, const F& c, Base base, const Lattice<F>& lat) {
  if (FieldTraits<F>::is_zero(a)) throw DomainError("cont_dual_q_hahn: parameter a must be nonzero");
  // Expanded form of the B_n above: the O(1) terms cancel exactly, which matters
  // in floating point where the printed form loses digits as p^n shrinks.
  auto B = [=](long n) {
    const F pn = base_pow(lat, base, n), abc = a * b * c;
    return ((a + b + c) * pn + abc * base_pow(lat, base, n - 1) -
            abc * base_pow(lat, base, 2 * n - 1) * (F(1) + base_pow(lat, base, 1))) /
           F(2);
  };
  auto C = [=](long n) {
    const F pm = base_pow(lat, base, n - 1);
    return (F(1) - a * b * pm) * (F(1) - a * c * pm) * (F(1) - b * c * pm) * (F(1) - base_pow(lat, base, n)) /
           F(4);
  };
  return {"cdqh", Seq<F>::formula(B, 0), Seq<F>::formula(C, 0)};
}

/// Coefficients of (a x - c) S_q P_n = (a_n x + b_n) P_n + c_n P_{n-1}, with pi = a x - c.
template <class F>
struct RelationCoeffs {
  Seq<F> a;
  Seq<F> b;
  Seq<F> c;
  XPoly<F> pi;
};

enum class Theorem1Kind { ChebyshevT, AlSalamChihara, ContDualQHahn };

/// The three solutions of S_q P_n = alpha_n P_n + c_n P_{n-1} together with their
/// closed-form relation coefficients (a_n = 0, b_n = alpha_n, c_n as derived).
///
/// The dual q-Hahn instance uses base q^{1/2} and parameters (sigma, -sigma,
/// sigma q^{1/4}); note ab = -1 for these, not +1.
template <class F>
std::pair<TTRRSpec<F>, RelationCoeffs<F>> theorem1_family(Theorem1Kind kind, int sigma, const Lattice<F>& lat) {
  if (sigma != 1 && sigma != -1) throw DomainError("sigma must be +1 or -1");
  const F s(sigma);
  RelationCoeffs<F> rel{Seq<F>::constant(F(0)), Seq<F>::formula([lat](long n) { return lat.alpha_n(n); }),
                        Seq<F>::constant(F(0)), XPoly<F>(F(1))};
  switch (kind) {
    case Theorem1Kind::ChebyshevT:
      return {chebyshev_T<F>(), rel};
    case Theorem1Kind::AlSalamChihara: {
      auto spec = al_salam_chihara(s, s * lat.u_pow(2), Base::Q, lat);
      spec.label = sigma > 0 ? "asc-theorem1(sigma=1)" : "asc-theorem1(sigma=-1)";
      rel.c = Seq<F>::formula([s, lat](long n) {
        return s * (F(1) - lat.u_pow(4 * n)) * (F(1) - lat.u_pow(4 * n - 2)) / (F(4) * lat.u_pow(2 * n));
      });
      return {spec, rel};
    }
    case Theorem1Kind::ContDualQHahn: {
      auto spec = cont_dual_q_hahn(s, -s, s * lat.u_pow(1), Base::QHalf, lat);
      spec.label = sigma > 0 ? "cdqh-theorem1(sigma=1)" : "cdqh-theorem1(sigma=-1)";
      rel.c = Seq<F>::formula([s, lat](long n) {
        return s * (F(1) - lat.u_pow(2 * n)) * (F(1) - lat.u_pow(4 * n - 2)) * (F(1) + lat.u_pow(2 * n - 2)) /
               (F(4) * lat.u_pow(2 * n - 1));
      });
      return {spec, rel};
    }
  }
  throw DomainError("unknown theorem-1 family");
}

/// Chebyshev T with (x - c) S_q T_n = (alpha_n x - alpha_n c) T_n, i.e.
/// a_n = alpha_n, b_n = -alpha_n c, c_n = 0.
template <class F>
std::pair<TTRRSpec<F>, RelationCoeffs<F>> theorem2_chebyshev(const F& c, const Lattice<F>& lat) {
  RelationCoeffs<F> rel{Seq<F>::formula([lat](long n) { return lat.alpha_n(n); }),
                        Seq<F>::formula([lat, c](long n) { return -lat.alpha_n(n) * c; }),
                        Seq<F>::constant(F(0)), XPoly<F>(std::vector<F>{-c, F(1)})};
  return {chebyshev_T<F>(), rel};
}

/// Parameters of the candidate sequences that appear while solving the
/// difference system. Unused members are ignored by each constructor.
template <class F>
struct CandidateParams {
  F B0{0};
  F r{0};
  F Kb{0};
  F k2{0};
  F a{0};
  F b{0};
  F bhat{0};
};

template <class F>
struct CandidateSequences {
  std::vector<F> B;
  std::vector<F> c;  // empty when the construction has no c_n
  std::vector<F> C;
};

namespace detail {
template <class F>
F checked_inverse(const F& d, long n, const char* what) {
  if (FieldTraits<F>::is_zero(d))
    throw BreakdownError(n, std::string("vanishing denominator ") + what + " at n = " + std::to_string(n));
  return F(1) / d;
}
}  // namespace detail

/// K_b = ((1 - r) B_0 - (1 - r q^2) q^{-1} B_1) / (1 - q^{-1/2}).
template <class F>
F candidate_kb(const F& B0, const F& B1, const F& r, const Lattice<F>& lat) {
  return ((F(1) - r) * B0 - (F(1) - r * lat.u_pow(8)) * lat.u_pow(-4) * B1) / (F(1) - lat.u_pow(-2));
}

/// Closed forms for B_n, c_n, C_n (n = 0..N) in the pi = 1 case with
/// t_n = k_2 (1 - r q^n) q^{-n/2}. Throws BreakdownError on a vanishing denominator.
template <class F>
CandidateSequences<F> candidate_case1(const CandidateParams<F>& p, long N, const Lattice<F>& lat) {
  CandidateSequences<F> out;
  const F one(1);
  const F rq = p.r * lat.u_pow(4);
  const F half_plus = one + lat.u_pow(2);
  for (long n = 0; n <= N; ++n) {
    const F qn = lat.u_pow(4 * n), qn2 = lat.u_pow(2 * n);
    const F d0 = detail::checked_inverse(one - p.r * qn, n, "1 - r q^n");
    const F d1 = detail::checked_inverse(one - p.r * lat.u_pow(4 * n + 4), n, "1 - r q^{n+1}");
    const F B = ((one - p.r) * (one - rq) * p.B0 * qn2 + p.Kb * (one - qn2) * (one - p.r * lat.u_pow(2 * n + 2))) *
                qn2 * d0 * d1;
    const F common = (one - lat.u_pow(4 * n - 2)) * (one - qn2) *
                     (p.B0 * (one - rq) * (one + qn2) + p.Kb * (lat.u_pow(2) - qn2));
    const F c = common * lat.u_pow(-2 * n) / (F(2) * half_plus) * d0;
    const F k2inv = detail::checked_inverse(p.k2, n, "k_2");
    const F C = common / (F(2) * half_plus) * k2inv * d0 * d0;
    out.B.push_back(B);
    out.c.push_back(c);
    out.C.push_back(C);
  }
  return out;
}

enum class Theorem2Case { Case2, Case3 };

/// a^2 + b^2 - 2 alpha a b; zero for admissible case-2 parameters.
template <class F>
F case2_constraint(const F& a, const F& b, const Lattice<F>& lat) {
  return a * a + b * b - F(2) * lat.alpha() * a * b;
}

/// Candidate (B_n, C_n), n = 0..N, for the degree-one cases with r = 0 (Case2) or
/// r = ab != 0 (Case3). C_0 = 0.
template <class F>
CandidateSequences<F> candidate_theorem2(Theorem2Case which, const CandidateParams<F>& p, long N,
                                         const Lattice<F>& lat) {
  CandidateSequences<F> out;
  const F one(1), ab = p.a * p.b;
  for (long n = 0; n <= N; ++n) {
    const F qn = lat.u_pow(4 * n);
    if (which == Theorem2Case::Case2) {
      out.B.push_back((p.a + p.b) * qn / F(2));
      out.C.push_back(n == 0 ? F(0) : (one - ab * lat.u_pow(4 * n - 4)) * (one - qn) / F(4));
      continue;
    }
    const F d0 = detail::checked_inverse(one - ab * qn, n, "1 - ab q^n");
    const F d1 = detail::checked_inverse(one - ab * lat.u_pow(4 * n + 4), n, "1 - ab q^{n+1}");
    out.B.push_back(lat.u_pow(1) * (one + lat.u_pow(2)) * (one - ab) * (p.a - p.b) * qn / F(2) * d0 * d1);
    if (n == 0) {
      out.C.push_back(F(0));
      continue;
    }
    const F num = (one - qn) * (one - p.a * p.a * qn) * (one - p.b * p.b * qn) * (one - ab * ab * qn);
    const F den = F(4) * (one - ab * lat.u_pow(4 * n - 2)) * (one - ab * qn) * (one - ab * qn) *
                  (one - ab * lat.u_pow(4 * n + 2));
    out.C.push_back(num * detail::checked_inverse(den, n, "case-3 denominator"));
  }
  return out;
}

}  // namespace awq
