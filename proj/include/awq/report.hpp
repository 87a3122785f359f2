#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "awq/field.hpp"

namespace awq {

enum class Status { Zero, Nonzero, NotEvaluated };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Zero: return "zero";
    case Status::Nonzero: return "nonzero";
    case Status::NotEvaluated: return "not-evaluated";
  }
  return "?";
}

/// One residual: a scalar (one value) or a polynomial (its coefficients, low
/// degree first). scale is the term magnitude the float zero test was relative to.
template <class F>
struct ResidualEntry {
  std::string check;
  long n = 0;
  Status status = Status::Zero;
  std::vector<F> values;
  double scale = 0.0;
  std::string note;
};

template <class F>
struct ResidualReport {
  std::vector<ResidualEntry<F>> entries;
  std::vector<std::string> notes;

  void add(std::string check, long n, std::vector<F> values, double scale, double tol) {
    if (values.empty()) values.push_back(F(0));
    Status st = Status::Zero;
    for (const auto& v : values)
      if (!negligible<F>(v, scale, tol)) st = Status::Nonzero;
    entries.push_back({std::move(check), n, st, std::move(values), scale, {}});
  }

  void skip(std::string check, long n, std::string why) {
    entries.push_back({std::move(check), n, Status::NotEvaluated, {}, 0.0, std::move(why)});
  }

  void append(const ResidualReport& o) {
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }

  /// True when no evaluated entry is nonzero.
  bool all_zero() const {
    return std::none_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == Status::Nonzero; });
  }

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const auto& e) { return e.status == s; }));
  }

  std::vector<long> nonzero_at(const std::string& check) const {
    std::vector<long> out;
    for (const auto& e : entries)
      if (e.check == check && e.status == Status::Nonzero) out.push_back(e.n);
    return out;
  }

  const ResidualEntry<F>* find(const std::string& check, long n) const {
    for (const auto& e : entries)
      if (e.check == check && e.n == n) return &e;
    return nullptr;
  }

  /// Largest |value| over evaluated entries (0 for the formal field).
  double max_abs() const {
    double m = 0.0;
    for (const auto& e : entries)
      for (const auto& v : e.values) m = std::max(m, FieldTraits<F>::magnitude(v));
    return m;
  }
};

namespace detail {

/// A double that carries a bound on the magnitudes it was built from, so a
/// float residual can be judged relative to the size of its terms.
struct Tracked {
  double v = 0.0;
  double m = 0.0;
  Tracked() = default;
  Tracked(double x) : v(x), m(std::fabs(x)) {}  // NOLINT: implicit on purpose
  Tracked(double x, double mag) : v(x), m(mag) {}
  friend Tracked operator+(Tracked a, Tracked b) { return {a.v + b.v, a.m + b.m}; }
  friend Tracked operator-(Tracked a, Tracked b) { return {a.v - b.v, a.m + b.m}; }
  Tracked operator-() const { return {-v, m}; }
  friend Tracked operator*(Tracked a, Tracked b) { return {a.v * b.v, a.m * b.m}; }
  friend Tracked operator/(Tracked a, Tracked b) { return {a.v / b.v, a.m / std::fabs(b.v)}; }
};

/// Working type for residual formulas: the field itself when exact.
template <class F>
using Work = std::conditional_t<FieldTraits<F>::exact, F, Tracked>;

template <class F>
F value_of(const Work<F>& w) {
  if constexpr (FieldTraits<F>::exact) return w;
  else return w.v;
}

template <class F>
double scale_of(const Work<F>& w) {
  if constexpr (FieldTraits<F>::exact) return 0.0;
  else return w.m;
}

template <class F>
bool work_negligible(const Work<F>& w, double tol) {
  return negligible<F>(value_of<F>(w), scale_of<F>(w), tol);
}

}  // namespace detail

}  // namespace awq
