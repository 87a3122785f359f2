#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "awq/families.hpp"
#include "awq/report.hpp"

namespace awq {

// ---------------------------------------------------------------------------
// Structure relation fit

template <class F>
struct FitFailure {
  long n = 0;
  std::vector<long> degrees;    // basis indices outside {n-1, n, n+1} with nonzero coefficient
  std::vector<F> coefficients;  // matching coefficients
};

template <class F>
using FitResult = std::variant<RelationCoeffs<F>, FitFailure<F>>;

/// Expands pi S_q P_n in the family's own basis for n = 0..horizon-1 and reads off
/// (a_n, b_n, c_n) from the coefficients on P_{n+1}, P_n, P_{n-1}. Fails at the
/// first n whose expansion reaches outside that window.
template <class F>
FitResult<F> fit_s_relation(const FamilyInstance<F>& fam, const XPoly<F>& pi, const Lattice<F>& lat,
                            double tol = kDefaultFloatTol) {
  if (pi.degree() > 1) throw DomainError("fit_s_relation: pi must have degree at most 1");
  if (pi.is_zero()) throw DomainError("fit_s_relation: pi must be nonzero");
  if (fam.horizon < 2) throw DomainError("fit_s_relation: family horizon must be at least 2");

  std::vector<F> a, b, c;
  for (long n = 0; n < fam.horizon; ++n) {
    const XPoly<F> f = pi * sq(fam.polys[n], lat, tol);
    const std::vector<F> co = expand_in_basis(f, fam.polys);
    const double scale = f.magnitude();
    FitFailure<F> fail{n, {}, {}};
    for (long k = 0; k < static_cast<long>(co.size()); ++k) {
      if (k >= n - 1 && k <= n + 1) continue;
      if (!negligible<F>(co[k], scale, tol)) {
        fail.degrees.push_back(k);
        fail.coefficients.push_back(co[k]);
      }
    }
    if (!fail.degrees.empty()) return fail;
    auto at = [&](long k) { return k >= 0 && k < static_cast<long>(co.size()) ? co[k] : F(0); };
    const F an = at(n + 1);
    a.push_back(an);
    b.push_back(at(n) - an * fam.spec.B(n));
    c.push_back(n == 0 ? F(0) : at(n - 1) - an * fam.spec.C(n));
  }
  return RelationCoeffs<F>{Seq<F>::table(std::move(a)), Seq<F>::table(std::move(b)), Seq<F>::table(std::move(c)),
                           pi};
}

/// Residuals between two relations' coefficient sequences for n in [lo, hi].
template <class F>
ResidualReport<F> compare_relations(const RelationCoeffs<F>& x, const RelationCoeffs<F>& y, long lo, long hi,
                                    double tol = kDefaultFloatTol) {
  ResidualReport<F> rep;
  const std::pair<const char*, const Seq<F> RelationCoeffs<F>::*> cols[] = {
      {"a_n", &RelationCoeffs<F>::a}, {"b_n", &RelationCoeffs<F>::b}, {"c_n", &RelationCoeffs<F>::c}};
  for (long n = lo; n <= hi; ++n) {
    // The three coefficients multiply terms of one relation, so they share a scale.
    double scale = 0.0;
    for (const auto& [name, member] : cols)
      scale = std::max({scale, FieldTraits<F>::magnitude((x.*member)(n)), FieldTraits<F>::magnitude((y.*member)(n))});
    for (const auto& [name, member] : cols) rep.add(name, n, {(x.*member)(n) - (y.*member)(n)}, scale, tol);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Five-term D_q relation

template <class F>
struct DqFiveTerm {
  F r1{0}, r2{0}, r3{0}, r4{0}, r5{0};
};

namespace detail {

/// a, b, c, B, C with the out-of-range conventions of the five-term relation:
/// anything below index 0 is 0, and C_0 = c_0 = 0.
template <class F>
struct FiveTermAccess {
  const RelationCoeffs<F>& rel;
  const TTRRSpec<F>& spec;
  F a(long k) const { return k < 0 ? F(0) : rel.a(k); }
  F b(long k) const { return k < 0 ? F(0) : rel.b(k); }
  F c(long k) const { return k <= 0 ? F(0) : rel.c(k); }
  F B(long k) const { return k < 0 ? F(0) : spec.B(k); }
  F C(long k) const { return k <= 0 ? F(0) : spec.C(k); }
  F g(long k) const { return b(k) + a(k) * B(k); }
  F s(long k) const { return c(k) + a(k) * C(k); }
};

}  // namespace detail

/// The coefficients of (ax - c) U_2 D_q P_n = r1 P_{n+2} + r2 P_{n+1} + r3 P_n + r4 P_{n-1} + r5 P_{n-2},
/// with g_n = b_n + a_n B_n and s_n = c_n + a_n C_n.
template <class F>
DqFiveTerm<F> dq_five_term_coeffs(const RelationCoeffs<F>& rel, const TTRRSpec<F>& spec, long n,
                                  const Lattice<F>& lat) {
  if (n < 0) throw DomainError("dq_five_term_coeffs: n must be nonnegative");
  const detail::FiveTermAccess<F> v{rel, spec};
  const F al = lat.alpha(), one(1);
  DqFiveTerm<F> r;
  r.r1 = v.a(n + 1) - al * v.a(n);
  r.r2 = v.g(n + 1) - al * v.g(n) + v.a(n) * (v.B(n) - al * v.B(n + 1));
  r.r3 = v.s(n + 1) - al * v.s(n) + v.g(n) * (one - al) * v.B(n) + v.a(n - 1) * v.C(n) -
         al * v.a(n) * v.C(n + 1);
  r.r4 = (v.g(n - 1) - al * v.g(n)) * v.C(n) + v.s(n) * (v.B(n) - al * v.B(n - 1));
  r.r5 = v.C(n) * v.s(n - 1) - al * v.C(n - 1) * v.s(n);
  return r;
}

template <class F>
struct DqFiveTermCheck {
  ResidualReport<F> report;
  std::vector<DqFiveTerm<F>> coeffs;  // index n
};

/// Recomputes (ax - c) U_2 D_q P_n directly and subtracts the five-term
/// combination, for n = 0..n_max. Needs P up to n_max + 2.
template <class F>
DqFiveTermCheck<F> verify_dq_five_term(const FamilyInstance<F>& fam, const RelationCoeffs<F>& rel, long n_max,
                                       const Lattice<F>& lat, double tol = kDefaultFloatTol) {
  if (fam.horizon < n_max + 2)
    throw DomainError("verify_dq_five_term: horizon " + std::to_string(fam.horizon) + " is too small for n_max " +
                      std::to_string(n_max) + " (need n_max + 2)");
  DqFiveTermCheck<F> out;
  const XPoly<F> pre = rel.pi * u2_poly(lat);
  for (long n = 0; n <= n_max; ++n) {
    const auto r = dq_five_term_coeffs(rel, fam.spec, n, lat);
    const XPoly<F> lhs = pre * dq(fam.polys[n], lat, tol);
    XPoly<F> res = lhs;
    double scale = lhs.magnitude();
    const F rs[] = {r.r1, r.r2, r.r3, r.r4, r.r5};
    for (int i = 0; i < 5; ++i) {
      const long k = n + 2 - i;
      if (k < 0) continue;
      const XPoly<F> term = fam.polys[k] * rs[i];
      res -= term;
      scale += term.magnitude();
    }
    out.report.add("dq-five-term", n, res.coeffs(), scale, tol);
    out.coeffs.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Difference system

/// B, C, a, b, c plus the constants of t_n = k1 q^{n/2} + k2 q^{-n/2}, with t_0 = k1 + k2.
template <class F>
struct SystemSequences {
  Seq<F> B, C, a, b, c;
  F k1{0}, k2{0};
};

/// The t-constants from the first two values:
/// k1 = (c2 C1 - q^{-1/2} c1 C2)/((q - 1) C1 C2), k2 = (c2 C1 - q^{1/2} c1 C2)/((q^{-1} - 1) C1 C2).
template <class F>
std::pair<F, F> t_constants(const F& c1, const F& c2, const F& C1, const F& C2, const Lattice<F>& lat) {
  if (FieldTraits<F>::is_zero(C1) || FieldTraits<F>::is_zero(C2))
    throw DomainError("t constants need C_1 != 0 and C_2 != 0");
  const F k1 = (c2 * C1 - lat.u_pow(-2) * c1 * C2) / ((lat.u_pow(4) - F(1)) * C1 * C2);
  const F k2 = (c2 * C1 - lat.u_pow(2) * c1 * C2) / ((lat.u_pow(-4) - F(1)) * C1 * C2);
  return {k1, k2};
}

template <class F>
SystemSequences<F> system_sequences(const TTRRSpec<F>& spec, const RelationCoeffs<F>& rel, const Lattice<F>& lat) {
  SystemSequences<F> s{spec.b_seq, spec.c_seq, rel.a, rel.b, rel.c};
  std::tie(s.k1, s.k2) = t_constants(rel.c(1), rel.c(2), spec.C(1), spec.C(2), lat);
  return s;
}

struct SystemOptions {
  bool enforce_standing_assumption = true;
  double tol = kDefaultFloatTol;
};

namespace detail {

/// Thrown by the accessors when a stencil reaches below index 0.
struct BelowRange {};

template <class F>
class SystemAccess {
 public:
  using W = Work<F>;
  SystemAccess(const SystemSequences<F>& s, const Lattice<F>& lat, const Seq<F>* r_override = nullptr)
      : s_(s), lat_(lat), r_(r_override) {}

  W al() const { return W(lat_.alpha()); }
  W a(long k) const { return get(s_.a, k); }
  W b(long k) const { return get(s_.b, k); }
  W c(long k) const { return k == 0 ? W(F(0)) : get(s_.c, k); }
  W B(long k) const { return get(s_.B, k); }
  W C(long k) const { return k == 0 ? W(F(0)) : get(s_.C, k); }
  W t(long k) const {
    if (k < 0) throw BelowRange{};
    if (k == 0) return W(s_.k1 + s_.k2);
    const W Ck = C(k);
    if (FieldTraits<F>::is_zero(value_of<F>(Ck)))
      throw DomainError("t_" + std::to_string(k) + " needs C_" + std::to_string(k) + " != 0");
    return c(k) / Ck;
  }
  W r(long k) const {
    if (r_) return get(*r_, k);
    return t(k) + a(k) - a(k - 1);
  }

 private:
  static W get(const Seq<F>& seq, long k) {
    if (auto v = seq.get(k)) return W(*v);
    if (k < 0) throw BelowRange{};
    throw DomainError("stencil out of range: index " + std::to_string(k) + " is beyond the supplied sequences");
  }
  const SystemSequences<F>& s_;
  const Lattice<F>& lat_;
  const Seq<F>* r_;
};

template <class F>
using SystemEquation = std::function<Work<F>(const SystemAccess<F>&, long)>;

/// The verbatim c-terms of the bracket in seq7S: c_{n+1} - 2 alpha c_n + c_n - 2 alpha c_{n+1}.
template <class W>
W seq7_c_terms(const W& cn, const W& cn1, const W& al) {
  return cn1 - W(2) * al * cn + cn - W(2) * al * cn1;
}

template <class F>
std::vector<std::pair<std::string, SystemEquation<F>>> system_equations() {
  using A = SystemAccess<F>;
  using W = Work<F>;
  const W one(F(1)), two(F(2)), quarter(F(1) / F(4));
  std::vector<std::pair<std::string, SystemEquation<F>>> eq;
  eq.emplace_back("eq1S", [=](const A& v, long n) { return v.a(n + 2) - two * v.al() * v.a(n + 1) + v.a(n); });
  eq.emplace_back("eq2S", [=](const A& v, long n) { return v.t(n + 2) - two * v.al() * v.t(n + 1) + v.t(n); });
  eq.emplace_back("eq3S", [=](const A& v, long n) {
    return v.r(n + 3) * v.B(n + 2) - (v.r(n + 2) + v.r(n + 1)) * v.B(n + 1) + v.r(n) * v.B(n);
  });
  eq.emplace_back("eq4S", [=](const A& v, long n) {
    const W al = v.al();
    const W lhs = v.r(n) * (v.B(n) * v.B(n) - two * al * v.B(n) * v.B(n - 1) + v.B(n - 1) * v.B(n - 1));
    const W rhs = (v.r(n + 1) + v.r(n + 2)) * (v.C(n + 1) - quarter) -
                  two * (one + al) * v.r(n) * (v.C(n) - quarter) +
                  (v.r(n - 1) + v.r(n - 2)) * (v.C(n - 1) - quarter);
    return lhs - rhs;
  });
  eq.emplace_back("eq5S", [=](const A& v, long n) {
    const W al = v.al();
    const W Bn = v.B(n);
    const W bracket = (two * v.a(n) - v.a(n + 2) - v.a(n - 1)) * v.C(n + 1) +
                      (two * v.a(n) - v.a(n + 1) - v.a(n - 2)) * v.C(n) +
                      (one - two * al) * (v.c(n) + v.c(n + 1)) + (al * al - one) * v.a(n);
    const W rhs = two * (one - al) * (v.a(n) * Bn + v.b(n)) * Bn * Bn +
                  (v.t(n + 1) + v.a(n + 1) - v.a(n + 2)) * v.B(n + 1) * v.C(n + 1) +
                  (v.t(n) + v.a(n - 1) - v.a(n - 2)) * v.B(n - 1) * v.C(n) + bracket * Bn +
                  two * (v.b(n) - al * v.b(n + 1)) * v.C(n + 1) + two * (v.b(n) - al * v.b(n - 1)) * v.C(n);
    return (one - al * al) * v.b(n) - rhs;
  });
  eq.emplace_back("seq3S", [=](const A& v, long n) {
    return (v.a(n + 1) - v.a(n + 2)) * v.B(n + 1) + (v.a(n) - v.a(n - 1)) * v.B(n) + v.b(n + 2) -
           two * v.al() * v.b(n + 1) + v.b(n);
  });
  eq.emplace_back("seq4S", [=](const A& v, long n) {
    return (v.a(n + 1) - v.a(n + 2) - v.t(n + 2)) * v.B(n + 1) +
           (v.a(n) - v.a(n - 1) + v.t(n + 1) + v.t(n)) * v.B(n) - v.t(n - 1) * v.B(n - 1) + v.b(n + 1) -
           two * v.al() * v.b(n) + v.b(n - 1);
  });
  eq.emplace_back("seq5S", [=](const A& v, long n) {
    const W al = v.al();
    const W lhs = (v.a(n + 1) - v.a(n + 2)) * v.B(n + 1) * v.B(n + 1) + two * (one - al) * v.a(n) * v.B(n) * v.B(n) +
                  (v.a(n) - v.a(n - 1)) * v.B(n) * v.B(n + 1) + (v.a(n) - v.a(n + 2)) * v.C(n + 1) +
                  (v.b(n + 1) + v.b(n) - two * al * v.b(n + 1)) * v.B(n + 1) +
                  (v.b(n + 1) + v.b(n) - two * al * v.b(n)) * v.B(n) + (v.a(n) - v.a(n - 2)) * v.C(n) +
                  v.c(n + 2) - two * al * v.c(n + 1) + v.c(n);
    return lhs - (one - al * al) * v.a(n);
  });
  eq.emplace_back("seq6S", [=](const A& v, long n) {
    const W al = v.al();
    const W lhs = (two * (one - al) * v.a(n) + v.t(n)) * v.B(n) * v.B(n) +
                  (v.t(n) + v.a(n - 1) - v.a(n - 2)) * v.B(n - 1) * v.B(n - 1) +
                  (v.b(n) + v.b(n - 1) - two * al * v.b(n)) * v.B(n) +
                  (v.a(n) - v.t(n - 1) - v.t(n + 1) - v.a(n + 1)) * v.B(n) * v.B(n - 1) +
                  (v.b(n - 1) + v.b(n) - two * al * v.b(n - 1)) * v.B(n - 1) +
                  (v.a(n) - v.a(n + 2) - v.t(n + 2) - v.t(n + 1)) * v.C(n + 1) +
                  (two * (one + al) * v.t(n) + v.a(n) - v.a(n - 2)) * v.C(n) -
                  (v.t(n - 2) + v.t(n - 1)) * v.C(n - 1) + v.c(n + 1) - two * al * v.c(n) + v.c(n - 1);
    return lhs - (one - al * al) * (v.t(n) + v.a(n));
  });
  eq.emplace_back("seq7S", [=](const A& v, long n) {
    const W al = v.al();
    const W Bn = v.B(n);
    const W bracket = (two * v.a(n) - v.a(n + 2) - v.a(n - 1)) * v.C(n + 1) +
                      (two * v.a(n) - v.a(n + 1) - v.a(n - 2)) * v.C(n) + seq7_c_terms(v.c(n), v.c(n + 1), al) -
                      (one - al * al) * v.a(n);
    const W lhs = two * (one - al) * v.a(n) * Bn * Bn * Bn + two * (one - al) * v.b(n) * Bn * Bn + bracket * Bn +
                  (v.c(n + 1) + v.a(n + 1) * v.C(n + 1) - v.a(n + 2) * v.C(n + 1)) * v.B(n + 1) +
                  (v.c(n) + v.a(n - 1) * v.C(n) - v.a(n - 2) * v.C(n)) * v.B(n - 1) +
                  two * (v.b(n) - al * v.b(n + 1)) * v.C(n + 1) + two * (v.b(n) - al * v.b(n - 1)) * v.C(n);
    return lhs - (one - al * al) * v.b(n);
  });
  return eq;
}

template <class F>
void check_standing_assumption(const SystemAccess<F>& v, long lo, long hi, double tol) {
  for (long m = std::max(0L, lo); m <= hi; ++m) {
    Work<F> rm;
    try {
      rm = v.r(m);
    } catch (const BelowRange&) {
      continue;
    }
    if (work_negligible<F>(rm, tol))
      throw StandingAssumptionError(m, "r_" + std::to_string(m) + " = t_n + a_n - a_{n-1} vanishes; the difference "
                                       "system is only claimed under the standing assumption r_n != 0");
  }
}

template <class F>
ResidualReport<F> run_equations(const SystemAccess<F>& v,
                                const std::vector<std::pair<std::string, SystemEquation<F>>>& eqs, long n_lo,
                                long n_hi, double tol) {
  ResidualReport<F> rep;
  for (const auto& [name, fn] : eqs) {
    for (long n = n_lo; n <= n_hi; ++n) {
      try {
        const Work<F> w = fn(v, n);
        rep.add(name, n, {value_of<F>(w)}, scale_of<F>(w), tol);
      } catch (const BelowRange&) {
        rep.skip(name, n, "stencil reaches below index 0");
      }
    }
  }
  return rep;
}

}  // namespace detail

/// Residuals of eq1S..eq5S and seq3S..seq7S for n_lo <= n <= n_hi, ordered by
/// (equation, n). Entries whose stencil reaches below index 0 are reported as
/// not evaluated; a stencil beyond the supplied data is an error.
template <class F>
ResidualReport<F> system_residuals(const SystemSequences<F>& seqs, long n_lo, long n_hi, const Lattice<F>& lat,
                                   const SystemOptions& opt = {}) {
  if (n_lo > n_hi) throw DomainError("system_residuals: empty index range");
  const detail::SystemAccess<F> v(seqs, lat);
  if (opt.enforce_standing_assumption) detail::check_standing_assumption(v, n_lo - 2, n_hi + 3, opt.tol);
  auto rep = detail::run_equations(v, detail::system_equations<F>(), n_lo, n_hi, opt.tol);
  if (!opt.enforce_standing_assumption) rep.notes.push_back("standing assumption r_n != 0 waived");
  return rep;
}

/// eq3S and eq4S alone, with r supplied directly (as for the candidate sequences,
/// where r_n is known in closed form and a_n, c_n are not).
template <class F>
ResidualReport<F> recurrence_residuals(const Seq<F>& r, const Seq<F>& B, const Seq<F>& C, long n_lo, long n_hi,
                                       const Lattice<F>& lat, const SystemOptions& opt = {}) {
  const SystemSequences<F> seqs{B, C, {}, {}, {}};
  const detail::SystemAccess<F> v(seqs, lat, &r);
  if (opt.enforce_standing_assumption) detail::check_standing_assumption(v, n_lo - 2, n_hi + 3, opt.tol);
  auto all = detail::system_equations<F>();
  decltype(all) eqs;
  for (auto& e : all)
    if (e.first == "eq3S" || e.first == "eq4S") eqs.push_back(std::move(e));
  return detail::run_equations(v, eqs, n_lo, n_hi, opt.tol);
}

// ---------------------------------------------------------------------------
// Coefficient identities

/// Compares rel against b_n = alpha_n, c_n = (alpha_n - alpha_{n-1}) sum_{j<n} B_j (pi = 1) or
/// a_n = alpha_n, b_n = -alpha_n c + (alpha_n - alpha_{n-1}) sum_{j<n} B_j (pi = x - c), n = 0..n_max.
template <class F>
ResidualReport<F> power_constraints(const RelationCoeffs<F>& rel, const TTRRSpec<F>& spec, long n_max,
                                    const Lattice<F>& lat, double tol = kDefaultFloatTol) {
  using W = detail::Work<F>;
  const bool pi1 = rel.pi.degree() == 0 && FieldTraits<F>::is_one(rel.pi.coeff(0));
  const bool monic1 = rel.pi.degree() == 1 && FieldTraits<F>::is_one(rel.pi.coeff(1));
  if (!pi1 && !monic1)
    throw DomainError("power_constraints: pi must be 1 or of the form x - c, got " + rel.pi.str());
  const W c = monic1 ? W(-rel.pi.coeff(0)) : W(F(0));
  ResidualReport<F> rep;
  W sum(F(0));
  auto add = [&](const char* name, long n, const W& w) { rep.add(name, n, {detail::value_of<F>(w)}, detail::scale_of<F>(w), tol); };
  for (long n = 0; n <= n_max; ++n) {
    const W an(lat.alpha_n(n)), dn = W(lat.alpha_n(n)) - W(lat.alpha_n(n - 1));
    if (pi1) {
      add("b_n=alpha_n", n, W(rel.b(n)) - an);
      add("c_n=(alpha_n-alpha_{n-1})sumB", n, (n == 0 ? W(F(0)) : W(rel.c(n))) - dn * sum);
    } else {
      add("a_n=alpha_n", n, W(rel.a(n)) - an);
      add("b_n=-alpha_n*c+(alpha_n-alpha_{n-1})sumB", n, W(rel.b(n)) - (-(an * c) + dn * sum));
    }
    sum = sum + W(spec.B(n));
  }
  return rep;
}

template <class F>
struct TFit {
  F k1{0}, k2{0};
  ResidualReport<F> check;  // t_n - (k1 q^{n/2} + k2 q^{-n/2}) for n = 1..n_max
};

/// k1, k2 from c_1, c_2, C_1, C_2 plus the residual of the closed form at every
/// n in 1..n_max. Does not throw on a mismatch; see t_fit.
template <class F>
TFit<F> t_fit_check(const SystemSequences<F>& seqs, long n_max, const Lattice<F>& lat,
                    double tol = kDefaultFloatTol) {
  TFit<F> out;
  std::tie(out.k1, out.k2) = t_constants(seqs.c(1), seqs.c(2), seqs.C(1), seqs.C(2), lat);
  using W = detail::Work<F>;
  for (long n = 1; n <= n_max; ++n) {
    const W t = W(seqs.c(n)) / W(seqs.C(n));
    const W w = t - (W(out.k1) * W(lat.u_pow(2 * n)) + W(out.k2) * W(lat.u_pow(-2 * n)));
    out.check.add("t_n=k1*q^(n/2)+k2*q^(-n/2)", n, {detail::value_of<F>(w)}, detail::scale_of<F>(w), tol);
  }
  return out;
}

/// As t_fit_check, but throws StructureViolation naming the first n where t_n
/// leaves the two-exponential form.
template <class F>
TFit<F> t_fit(const SystemSequences<F>& seqs, long n_max, const Lattice<F>& lat, double tol = kDefaultFloatTol) {
  auto out = t_fit_check(seqs, n_max, lat, tol);
  for (const auto& e : out.check.entries)
    if (e.status == Status::Nonzero)
      throw StructureViolation(e.n, "t_n = c_n/C_n is not of the form k1 q^{n/2} + k2 q^{-n/2} at n = " +
                                        std::to_string(e.n));
  return out;
}

/// (c2 C1 - q^{-1/2} c1 C2)(c2 C1 - q^{1/2} c1 C2) c1.
template <class F>
F uniqueness_product(const SystemSequences<F>& seqs, const Lattice<F>& lat) {
  const F c1 = seqs.c(1), c2 = seqs.c(2), C1 = seqs.C(1), C2 = seqs.C(2);
  if (FieldTraits<F>::is_zero(C1) || FieldTraits<F>::is_zero(C2))
    throw DomainError("uniqueness_product needs C_1 != 0 and C_2 != 0");
  return (c2 * C1 - lat.u_pow(-2) * c1 * C2) * (c2 * C1 - lat.u_pow(2) * c1 * C2) * c1;
}

enum class InitialCase { Pi1, PiDeg1 };

/// Residuals of the low-index identities: for pi = 1 the three constraints on
/// B_0, B_1, B_2, C_1, C_2 (with w = 4 alpha^2 + 2 alpha - 1); for pi = x - c the
/// expressions for b_1, c_1, b_2, c_2, the combined identity, and C_1 + C_2 = 3/4
/// when B_0 = 0.
template <class F>
ResidualReport<F> initial_residuals(InitialCase which, const SystemSequences<F>& s, const F& cpar,
                                    const Lattice<F>& lat, double tol = kDefaultFloatTol) {
  using W = detail::Work<F>;
  ResidualReport<F> rep;
  auto add = [&](const char* name, const W& w) { rep.add(name, 0, {detail::value_of<F>(w)}, detail::scale_of<F>(w), tol); };
  const W al(lat.alpha()), one(F(1)), two(F(2)), half(F(1) / F(2));
  const W B0(s.B(0)), B1(s.B(1)), C1(s.C(1)), C2(s.C(2));
  if (which == InitialCase::Pi1) {
    const W B2(s.B(2));
    const W w = W(F(4)) * al * al + two * al - one;
    add("C1-first-case", (al + one) * (two * C1 - one) - (B1 - (two * al + one) * B0) * B0);
    add("B2-C2-first-case", (two * al + one) * B0 * C2 - B0 * (B0 + B1) * B2 -
                                half * (B0 + B1) * (two * al + one - w * (B0 + B1) * B0 / (al + one)));
    add("B2-first-case", al * (al + one) * (W(F(4)) * C2 - one) - (two * al + one) * (B0 + B1) * B2 -
                             (B0 - w * B1) * (B0 + B1));
    return rep;
  }
  const W c(cpar), b1(s.b(1)), c1(s.c(1)), b2(s.b(2)), c2(s.c(2));
  add("b1", b1 - (-(al * c) + (al - one) * B0));
  add("c1", c1 - (al - one) * (B0 - c) * B0);
  add("b2", b2 - (-((two * al * al - one) * c) + (al - one) * (two * al + one) * (B0 + B1)));
  add("c2", c2 - (two * (al * al - one) * (C1 - B0 * B1 - half) +
                  (al - one) * (two * al + one) * (B0 + B1) * (B0 + B1 - c)));
  add("b2-c2-identity", (b2 + c) * (B0 * B1 - C1) + (one - al * al) * c - c2 * B0);
  if (detail::work_negligible<F>(B0, tol))
    add("C1+C2=3/4", C1 + C2 - W(F(3) / F(4)));
  else
    rep.skip("C1+C2=3/4", 0, "only claimed when B_0 = 0");
  return rep;
}

}  // namespace awq
