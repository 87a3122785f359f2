#pragma once

#include <utility>

#include "awq/polycore.hpp"
#include "awq/upowers.hpp"

namespace awq {

/// The q-quadratic lattice x(s) = (q^s + q^-s)/2 seen from a coefficient field:
/// the powers of u = q^{1/4} and the constants alpha, alpha_n, gamma_n.
template <class F>
class Lattice {
 public:
  Lattice()
    requires std::same_as<F, Scalar>
  = default;
  /// Numeric lattice at u = u0. Rejects u0 in {0, 1, -1}, where q^{1/2} = q^{-1/2}.
  explicit Lattice(const Rational& u0)
    requires(!std::same_as<F, Scalar>)
      : up_(check(u0)) {}

  const UPowers<F>& powers() const noexcept { return up_; }
  F u_pow(long k) const { return up_.pow(k); }
  /// q^{k/2}.
  F q_half_pow(long k) const { return up_.pow(2 * k); }
  F lift(const Scalar& x) const { return up_.lift(x); }

  /// (q^{1/2} + q^{-1/2})/2.
  F alpha() const { return alpha_n(1); }
  /// (q^{n/2} + q^{-n/2})/2, any integer n.
  F alpha_n(long n) const { return (up_.pow(2 * n) + up_.pow(-2 * n)) / F(2); }
  /// (q^{n/2} - q^{-n/2})/(q^{1/2} - q^{-1/2}), any integer n (gamma_{-n} = -gamma_n).
  F gamma_n(long n) const {
    return (up_.pow(2 * n) - up_.pow(-2 * n)) / (up_.pow(2) - up_.pow(-2));
  }

 private:
  static const Rational& check(const Rational& u0) {
    if (u0.is_zero() || u0 * u0 == Rational(1))
      throw DomainError("lattice point u0 = " + u0.str() + " is degenerate (u0^2 = 1 or u0 = 0)");
    return u0;
  }
  UPowers<F> up_;
};

/// Askey-Wilson divided difference D_q on polynomials, computed as the exact
/// Laurent quotient [f(q^{1/2}z) - f(q^{-1/2}z)] / [(q^{1/2} - q^{-1/2})(z - 1/z)/2].
/// Throws ConsistencyError when the division leaves a remainder.
template <class F>
XPoly<F> dq(const XPoly<F>& f, const Lattice<F>& lat, double tol = kDefaultFloatTol) {
  if (f.degree() <= 0) return XPoly<F>();
  const LaurentPoly<F> g = to_laurent(f);
  LaurentPoly<F> num = half_shift(g, Shift::Up, lat.powers()) - half_shift(g, Shift::Down, lat.powers());
  const F scale = (lat.u_pow(2) - lat.u_pow(-2)) / F(2);
  num *= F(1) / scale;

  // Solve (z - 1/z) Q = num: the coefficient at e gives Q_{e-1} = num_e + Q_{e+1}.
  const long m = num.max_exponent();
  const double mag = num.magnitude();
  std::map<long, F> quo;
  auto q_at = [&](long k) { auto it = quo.find(k); return it == quo.end() ? F(0) : it->second; };
  for (long e = m; e >= -m + 2; --e) quo[e - 1] = num.coeff(e) + q_at(e + 1);
  // Remaining equations at e = -m+1 and e = -m must hold identically.
  const F r1 = num.coeff(-m + 1) + q_at(-m + 2) - q_at(-m);
  const F r0 = num.coeff(-m) + q_at(-m + 1);
  if (!negligible<F>(r1, mag, tol) || !negligible<F>(r0, mag, tol))
    throw ConsistencyError("dq: division by (z - 1/z) left a nonzero remainder");
  LaurentPoly<F> q;
  for (auto& [k, v] : quo) q.add_term(k, v);
  return from_laurent(q, tol);
}

/// Averaging operator S_q f = [f(q^{1/2}z) + f(q^{-1/2}z)]/2.
template <class F>
XPoly<F> sq(const XPoly<F>& f, const Lattice<F>& lat, double tol = kDefaultFloatTol) {
  if (f.degree() <= 0) return f;
  const LaurentPoly<F> g = to_laurent(f);
  LaurentPoly<F> s = half_shift(g, Shift::Up, lat.powers()) + half_shift(g, Shift::Down, lat.powers());
  s *= F(1) / F(2);
  return from_laurent(s, tol);
}

/// U_2(x) = (alpha^2 - 1)(x^2 - 1).
template <class F>
XPoly<F> u2_poly(const Lattice<F>& lat) {
  const F a = lat.alpha();
  const F k = a * a - F(1);
  return XPoly<F>(std::vector<F>{-k, F(0), k});
}

/// The two leading coefficients of D_q x^n: (gamma_n, (n gamma_{n-2} - (n-2) gamma_n)/4),
/// multiplying x^{n-1} and x^{n-3}.
template <class F>
std::pair<F, F> dq_power_leading(long n, const Lattice<F>& lat) {
  if (n < 0) throw DomainError("dq_power_leading: n must be nonnegative");
  const F gn = lat.gamma_n(n);
  const F second = (F(n) * lat.gamma_n(n - 2) - F(n - 2) * gn) / F(4);
  return {gn, second};
}

}  // namespace awq
