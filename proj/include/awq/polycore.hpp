#pragma once

#include <string>
#include <vector>

#include "awq/laurent.hpp"
#include "awq/xpoly.hpp"

namespace awq {

/// f -> f((z + 1/z)/2). The result is palindromic.
template <class F>
LaurentPoly<F> to_laurent(const XPoly<F>& f) {
  LaurentPoly<F> out;
  // x^k = 2^{-k} sum_j binom(k, j) z^{k-2j}
  std::vector<mpz_class> row{1};
  for (long k = 0; k <= f.degree(); ++k) {
    if (k > 0) {
      std::vector<mpz_class> next(row.size() + 1);
      next.front() = next.back() = 1;
      for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
      row = std::move(next);
    }
    const F& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (FieldTraits<F>::is_zero(c)) continue;
    mpz_class pow2 = mpz_class(1) << static_cast<mp_bitcnt_t>(k);
    for (long j = 0; j <= k; ++j)
      out.add_term(k - 2 * j, c * FieldTraits<F>::from_rational(Rational(row[j], pow2)));
  }
  return out;
}

/// Inverse of to_laurent. Throws ConsistencyError when g is not palindromic.
template <class F>
XPoly<F> from_laurent(const LaurentPoly<F>& g, double tol = kDefaultFloatTol) {
  if (!g.is_palindromic(tol))
    throw ConsistencyError("from_laurent: Laurent polynomial is not palindromic");
  if (g.is_zero()) return XPoly<F>();
  const long m = g.max_exponent();
  // g = g_0 + sum_k g_k (z^k + z^-k) = g_0 + sum_k 2 g_k T_k(x), with T_k the
  // classical Chebyshev polynomials T_{k+1} = 2x T_k - T_{k-1}.
  std::vector<F> out(static_cast<std::size_t>(m) + 1, F(0));
  std::vector<mpz_class> t_prev{1}, t_cur{0, 1};
  out[0] += g.coeff(0);
  for (long k = 1; k <= m; ++k) {
    if (k > 1) {
      std::vector<mpz_class> t_next(static_cast<std::size_t>(k) + 1, 0);
      for (std::size_t i = 0; i < t_cur.size(); ++i) t_next[i + 1] += 2 * t_cur[i];
      for (std::size_t i = 0; i < t_prev.size(); ++i) t_next[i] -= t_prev[i];
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
    }
    F gk = g.coeff(k);
    if (FieldTraits<F>::is_zero(gk)) continue;
    for (std::size_t i = 0; i < t_cur.size(); ++i)
      if (t_cur[i] != 0) out[i] += gk * FieldTraits<F>::from_rational(Rational(mpz_class(2 * t_cur[i])));
  }
  return XPoly<F>(std::move(out));
}

/// {P_0, ..., P_N} with P_k monic of degree k.
template <class F>
class MonicBasis {
 public:
  MonicBasis() = default;
  /// Throws DomainError when an entry is not monic of degree equal to its index.
  explicit MonicBasis(std::vector<XPoly<F>> polys) : p_(std::move(polys)) {
    for (std::size_t k = 0; k < p_.size(); ++k) {
      if (p_[k].degree() != static_cast<long>(k) || !FieldTraits<F>::is_one(p_[k].lead()))
        throw DomainError("MonicBasis: entry " + std::to_string(k) + " is not monic of degree " +
                          std::to_string(k));
    }
  }
  long max_degree() const noexcept { return static_cast<long>(p_.size()) - 1; }
  std::size_t size() const noexcept { return p_.size(); }
  const XPoly<F>& operator[](long k) const { return p_.at(static_cast<std::size_t>(k)); }
  const std::vector<XPoly<F>>& polys() const noexcept { return p_; }

 private:
  std::vector<XPoly<F>> p_;
};

/// Coefficients e_0..e_d (d = deg f) with f = sum e_k basis[k], by removing
/// leading terms from the top degree down. Throws DomainError if the basis is
/// too short.
template <class F>
std::vector<F> expand_in_basis(const XPoly<F>& f, const MonicBasis<F>& basis) {
  const long d = f.degree();
  if (d > basis.max_degree())
    throw DomainError("expand_in_basis: basis lacks degree " + std::to_string(d));
  std::vector<F> rest = f.coeffs();
  std::vector<F> out(static_cast<std::size_t>(d + 1), F(0));
  for (long k = d; k >= 0; --k) {
    F c = rest[static_cast<std::size_t>(k)];
    if (FieldTraits<F>::is_zero(c)) continue;
    const auto& pk = basis[k].coeffs();
    for (long j = 0; j < k; ++j) {
      const F& b = pk[static_cast<std::size_t>(j)];
      if (!FieldTraits<F>::is_zero(b)) rest[static_cast<std::size_t>(j)] -= c * b;
    }
    out[static_cast<std::size_t>(k)] = std::move(c);
  }
  return out;
}

/// Exact coefficient strings c_0..c_d of f, for tabular export.
template <class F>
std::vector<std::string> coefficient_strings(const XPoly<F>& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(FieldTraits<F>::str(c));
  if (out.empty()) out.push_back("0");
  return out;
}

}  // namespace awq
