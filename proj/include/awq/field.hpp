#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "awq/rational.hpp"
#include "awq/scalar.hpp"

namespace awq {

/// Uniform access to the three coefficient fields the library computes over:
/// Scalar (formal, exact in Q(u)), Rational (exact at a numeric u0) and double.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Scalar> {
  static constexpr bool exact = true;
  static constexpr const char* name = "formal";
  static Scalar from_rational(const Rational& r) { return Scalar(r); }
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  static bool is_one(const Scalar& x) { return x == Scalar(1); }
  static bool is_negative(const Scalar& x) {
    return !x.is_zero() && x.num().lead().sign() < 0;
  }
  static double magnitude(const Scalar&) { return 0.0; }
  static std::string str(const Scalar& x) { return x.str(); }
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool is_one(const Rational& x) { return x.is_one(); }
  static bool is_negative(const Rational& x) { return x.sign() < 0; }
  static double magnitude(const Rational& x) { return std::fabs(x.to_double()); }
  static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static double from_rational(const Rational& r) { return r.to_double(); }
  static bool is_zero(double x) { return x == 0.0; }
  static bool is_one(double x) { return x == 1.0; }
  static bool is_negative(double x) { return x < 0.0; }
  static double magnitude(double x) { return std::fabs(x); }
  static std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

/// Zero test used by every residual check: exact for exact fields, otherwise
/// |value| <= tol * max(1, scale) where scale is the magnitude of the terms that
/// produced the value.
template <class F>
bool negligible(const F& value, double scale, double tol) {
  if constexpr (FieldTraits<F>::exact) {
    (void)scale;
    (void)tol;
    return FieldTraits<F>::is_zero(value);
  } else {
    return std::fabs(value) <= tol * std::max(1.0, scale);
  }
}

/// Default tolerance for the inexact field.
inline constexpr double kDefaultFloatTol = 1e-9;

}  // namespace awq
