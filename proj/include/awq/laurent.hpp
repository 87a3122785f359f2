#pragma once

#include <map>

#include "awq/field.hpp"
#include "awq/upowers.hpp"

namespace awq {

/// Finite two-sided Laurent polynomial in z = q^s with coefficients in F.
/// Zero coefficients are never stored.
template <class F>
class LaurentPoly {
 public:
  using Map = std::map<long, F>;

  LaurentPoly() = default;
  explicit LaurentPoly(Map terms) {
    for (auto& [k, v] : terms) add_term(k, std::move(v));
  }

  const Map& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  F coeff(long k) const {
    auto it = t_.find(k);
    return it == t_.end() ? F(0) : it->second;
  }
  long min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }
  long max_exponent() const { return t_.empty() ? 0 : t_.rbegin()->first; }

  void add_term(long k, const F& v) {
    if (FieldTraits<F>::is_zero(v)) return;
    auto [it, inserted] = t_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (FieldTraits<F>::is_zero(it->second)) t_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, v] : o.t_) add_term(k, v);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, v] : o.t_) add_term(k, -v);
    return *this;
  }
  LaurentPoly& operator*=(const F& s) {
    if (FieldTraits<F>::is_zero(s)) {
      t_.clear();
      return *this;
    }
    for (auto it = t_.begin(); it != t_.end();) {
      it->second *= s;
      it = FieldTraits<F>::is_zero(it->second) ? t_.erase(it) : std::next(it);
    }
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const F& s) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [i, x] : a.t_)
      for (const auto& [j, y] : b.t_) out.add_term(i + j, x * y);
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }

  /// Coefficient at k equals coefficient at -k, within tol for the inexact field.
  bool is_palindromic(double tol = kDefaultFloatTol) const {
    double scale = magnitude();
    for (const auto& [k, v] : t_) {
      if (k <= 0) continue;
      if (!negligible<F>(v - coeff(-k), scale, tol)) return false;
    }
    for (const auto& [k, v] : t_)
      if (k < 0 && !t_.count(-k) && !negligible<F>(v, scale, tol)) return false;
    return true;
  }

  double magnitude() const {
    double m = 0.0;
    for (const auto& [k, v] : t_) m = std::max(m, FieldTraits<F>::magnitude(v));
    return m;
  }

 private:
  Map t_;
};

enum class Shift { Up, Down };

/// z -> q^{+-1/2} z: the coefficient at exponent k is multiplied by u^{+-2k}.
template <class F>
LaurentPoly<F> half_shift(const LaurentPoly<F>& g, Shift dir, const UPowers<F>& up) {
  typename LaurentPoly<F>::Map out;
  const long sign = dir == Shift::Up ? 1 : -1;
  for (const auto& [k, v] : g.terms()) out.emplace(k, v * up.pow(2 * sign * k));
  return LaurentPoly<F>(std::move(out));
}

}  // namespace awq
