#pragma once

#include <random>

#include "awq/scalar.hpp"
#include "awq/xpoly.hpp"

namespace awq::testing {

/// Deterministic generator of small random exact values for property tests.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long span = 9) {
    long den = integer(1, span);
    return Rational(integer(-span, span), den);
  }

  UPoly upoly(long max_degree) {
    std::vector<Rational> c;
    long d = integer(0, max_degree);
    for (long k = 0; k <= d; ++k) c.push_back(integer(0, 2) == 0 ? Rational() : rational());
    return UPoly(std::move(c));
  }

  /// Mix of Laurent monomial denominators and genuine rational functions.
  Scalar scalar(long max_degree = 3) {
    UPoly num = upoly(max_degree);
    if (integer(0, 2) > 0) return Scalar(num, UPoly::monomial(integer(0, 3)));
    UPoly den;
    while (den.is_zero()) den = upoly(max_degree);
    return Scalar(num, den);
  }

  Scalar nonzero_scalar(long max_degree = 3) {
    Scalar s;
    while (s.is_zero()) s = scalar(max_degree);
    return s;
  }

  template <class F, class Make>
  XPoly<F> xpoly(long max_degree, Make make) {
    std::vector<F> c;
    long d = integer(0, max_degree);
    for (long k = 0; k <= d; ++k) c.push_back(make());
    return XPoly<F>(std::move(c));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace awq::testing
