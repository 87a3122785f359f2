#pragma once

#include <string>
#include <vector>

#include "awq/field.hpp"

namespace awq {

/// Dense polynomial in the lattice variable x with coefficients in F.
///
/// Coefficient k multiplies x^k. Exact zeros at the top are trimmed, so
/// degree() is the index of the leading coefficient (-1 for zero).
template <class F>
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  XPoly(const F& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)

  /// c * x^k.
  static XPoly monomial(long k, const F& c = F(1)) {
    std::vector<F> v(static_cast<std::size_t>(k) + 1, F(0));
    v.back() = c;
    return XPoly(std::move(v));
  }
  static XPoly x() { return monomial(1); }

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<F>& coeffs() const noexcept { return c_; }
  F coeff(long k) const { return (k < 0 || k > degree()) ? F(0) : c_[static_cast<std::size_t>(k)]; }
  const F& lead() const { return c_.back(); }

  XPoly& operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!FieldTraits<F>::is_zero(o.c_[i])) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!FieldTraits<F>::is_zero(o.c_[i])) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  XPoly& operator*=(const F& s) {
    if (FieldTraits<F>::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_)
      if (!FieldTraits<F>::is_zero(c)) c *= s;
    trim();
    return *this;
  }

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(XPoly a, const F& s) { return a *= s; }
  friend XPoly operator*(const F& s, XPoly a) { return a *= s; }
  friend XPoly operator-(XPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (FieldTraits<F>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (FieldTraits<F>::is_zero(b.c_[j])) continue;
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return XPoly(std::move(out));
  }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

  /// x * this.
  XPoly times_x() const {
    if (is_zero()) return *this;
    std::vector<F> v;
    v.reserve(c_.size() + 1);
    v.push_back(F(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return XPoly(std::move(v));
  }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Largest coefficient magnitude (0 for exact fields).
  double magnitude() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, FieldTraits<F>::magnitude(c));
    return m;
  }

  /// Rendering in descending powers, e.g. "x^2 - 1/2" or "(u^4+1)/(2*u^2)*x".
  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && FieldTraits<F>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

namespace detail {

/// True when s has a '+' or '-' outside parentheses after its first character.
inline bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-') && s[i - 1] != 'e') return true;
  }
  return false;
}

}  // namespace detail

template <class F>
std::string XPoly<F>::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const F& c = c_[static_cast<std::size_t>(k)];
    if (FieldTraits<F>::is_zero(c)) continue;
    bool neg = FieldTraits<F>::is_negative(c);
    F mag = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string m = FieldTraits<F>::str(mag);
    std::string xs = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0) {
      out += detail::has_top_level_sum(m) ? "(" + m + ")" : m;
    } else if (FieldTraits<F>::is_one(mag)) {
      out += xs;
    } else {
      out += (detail::has_top_level_sum(m) ? "(" + m + ")" : m) + "*" + xs;
    }
  }
  return out;
}

/// Parses an x-polynomial with Scalar coefficients, e.g. "x - 1/3" or "(u^2+1)*x^2 - q".
/// Division is only allowed by constants. Throws ParseError.
XPoly<Scalar> parse_xpoly(std::string_view text);

}  // namespace awq
