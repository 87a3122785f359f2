#pragma once

#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "awq/errors.hpp"

namespace awq {

/// An integer-indexed sequence with an explicit domain: either a closed form on
/// an index interval or a finite table. Single entries can be overridden, which
/// is how the residual-locality tests corrupt a value.
template <class F>
class Seq {
 public:
  using Fn = std::function<F(long)>;

  Seq() = default;

  static Seq formula(Fn f, long lo = LONG_MIN, long hi = LONG_MAX) {
    Seq s;
    s.fn_ = std::make_shared<Fn>(std::move(f));
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
  }

  static Seq table(std::vector<F> values, long first = 0) {
    auto data = std::make_shared<std::vector<F>>(std::move(values));
    const long hi = first + static_cast<long>(data->size()) - 1;
    return formula([data, first](long n) { return (*data)[static_cast<std::size_t>(n - first)]; }, first,
                   hi);
  }

  static Seq constant(F v) { return formula([v](long) { return v; }); }

  bool defined(long n) const { return overrides_.count(n) || (fn_ && n >= lo_ && n <= hi_); }

  std::optional<F> get(long n) const {
    if (auto it = overrides_.find(n); it != overrides_.end()) return it->second;
    if (!fn_ || n < lo_ || n > hi_) return std::nullopt;
    return (*fn_)(n);
  }

  /// Throws DomainError outside the domain.
  F operator()(long n) const {
    if (auto v = get(n)) return *v;
    throw DomainError("sequence index " + std::to_string(n) + " outside its domain");
  }

  /// Value, or zero outside the domain (the P_{-1} = 0 style convention).
  F or_zero(long n) const {
    auto v = get(n);
    return v ? *v : F(0);
  }

  Seq with(long n, F v) const {
    Seq s = *this;
    s.overrides_[n] = std::move(v);
    return s;
  }

  long lo() const noexcept { return lo_; }
  long hi() const noexcept { return hi_; }

 private:
  std::shared_ptr<Fn> fn_;
  long lo_ = 0;
  long hi_ = -1;
  std::map<long, F> overrides_;
};

}  // namespace awq
