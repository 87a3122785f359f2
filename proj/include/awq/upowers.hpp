#pragma once

#include <cmath>

#include "awq/field.hpp"

namespace awq {

/// Source of the powers u^k = q^{k/4} in a coefficient field.
///
/// For Scalar this is the formal variable; for Rational and double it is a
/// fixed numeric point u0, which must be nonzero.
template <class F>
class UPowers {
 public:
  UPowers()
    requires std::same_as<F, Scalar>
      : u_(Scalar::u()) {}
  explicit UPowers(const Rational& u0)
    requires(!std::same_as<F, Scalar>)
      : u0_(u0), u_(FieldTraits<F>::from_rational(u0)) {
    if (u0.is_zero()) throw DomainError("u0 must be nonzero");
  }

  const F& u() const noexcept { return u_; }
  /// The numeric point; zero in formal mode.
  const Rational& point() const noexcept { return u0_; }

  /// u^k for any integer k.
  F pow(long k) const {
    if constexpr (std::same_as<F, Scalar>) {
      return Scalar::u_pow(k);
    } else if constexpr (std::same_as<F, Rational>) {
      return u0_.pow(k);
    } else {
      return std::pow(u_, static_cast<double>(k));
    }
  }

  /// Maps a formal parameter into this field (identity, exact evaluation, or
  /// exact evaluation rounded to double).
  F lift(const Scalar& x) const {
    if constexpr (std::same_as<F, Scalar>) {
      return x;
    } else {
      return FieldTraits<F>::from_rational(scalar_eval(x, u0_));
    }
  }

 private:
  Rational u0_;
  F u_;
};

}  // namespace awq
