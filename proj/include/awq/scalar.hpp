#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "awq/rational.hpp"
#include "awq/upoly.hpp"

namespace awq {

/// Element of the rational-function field Q(u), u = q^{1/4}.
///
/// Canonical form: den is monic, gcd(num, den) = 1, zero is 0/1. Two Scalars are
/// equal iff their canonical forms are. Negative powers of u live in the
/// denominator, so q^{-n/2} is 1/u^{2n}.
class Scalar {
 public:
  Scalar() : den_(Rational(1)) {}
  Scalar(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}           // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : num_(std::move(v)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  /// num/den, normalized. Throws DivisionByZero for a zero denominator.
  Scalar(UPoly num, UPoly den);

  /// The formal variable u.
  static Scalar u() { return u_pow(1); }
  /// u^k for any integer k.
  static Scalar u_pow(long k);
  /// Parses the rendering grammar, e.g. "(u^4+1)/(2*u^2)", "1/2", "q^-1". Throws ParseError.
  static Scalar parse(std::string_view text);

  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_rational() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// The value when is_rational(); throws DomainError otherwise.
  Rational as_rational() const;
  /// True iff the denominator is a power of u (the value is a Laurent polynomial in u).
  bool is_laurent() const noexcept { return den_.is_monomial(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Canonical rendering with integer coefficients, e.g. "(u^4+1)/(2*u^2)".
  std::string str() const;

 private:
  struct Raw {};
  Scalar(UPoly num, UPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  UPoly num_;
  UPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Collects warning-level diagnostics from numeric evaluation.
struct Diagnostics {
  std::vector<std::string> warnings;
};

/// Exact value of x at u = u0. Throws PoleError when the denominator vanishes at u0.
/// u0 outside (0, 1) is allowed but reported through diag.
Rational scalar_eval(const Scalar& x, const Rational& u0, Diagnostics* diag = nullptr);

/// Warning text when u0 lies outside the regime 0 < u0 < 1, nullopt otherwise.
std::optional<std::string> regime_warning(const Rational& u0);

}  // namespace awq
