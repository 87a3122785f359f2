#pragma once

#include <string>
#include <utility>
#include <vector>

#include "awq/rational.hpp"

namespace awq {

/// Dense univariate polynomial over Q in the formal variable u (u stands for q^{1/4}).
///
/// Coefficient k multiplies u^k. Trailing zeros are always trimmed, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  /// c * u^k.
  static UPoly monomial(long k, Rational c = Rational(1));

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  long valuation() const noexcept;
  bool is_zero() const noexcept { return c_.empty(); }
  /// True iff the polynomial is c * u^k for some nonzero c.
  bool is_monomial() const noexcept;
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(long k) const;
  const Rational& lead() const { return c_.back(); }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator-(UPoly a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Multiplies by u^k for k >= 0.
  UPoly shifted_up(long k) const;
  /// Divides by u^k; requires valuation() >= k.
  UPoly shifted_down(long k) const;

  /// Euclidean division over Q. Throws DivisionByZero for a zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd (zero only when both inputs are zero).
  static UPoly gcd(UPoly a, UPoly b);

  UPoly monic() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// Human-readable form in descending powers, e.g. "u^4+1" or "1/2*u^2-u".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace awq
