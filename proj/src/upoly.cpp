#include "awq/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace awq {

UPoly::UPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(long k, Rational c) {
  if (k < 0) throw DomainError("UPoly::monomial with negative exponent");
  UPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, Rational());
  p.c_.back() = std::move(c);
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

long UPoly::valuation() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<long>(i);
  return -1;
}

bool UPoly::is_monomial() const noexcept {
  return !c_.empty() && valuation() == degree();
}

Rational UPoly::coeff(long k) const {
  if (k < 0 || k > degree()) return Rational();
  return c_[static_cast<std::size_t>(k)];
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& c : c_)
    if (!c.is_zero()) c *= s;
  return *this;
}

UPoly operator-(UPoly a) {
  for (auto& c : a.c_)
    if (!c.is_zero()) c = -c;
  return a;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  // Loop over the sparser factor's nonzero terms.
  auto nonzero = [](const UPoly& p) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      if (!p.c_[i].is_zero()) idx.push_back(i);
    return idx;
  };
  auto ia = nonzero(a);
  auto ib = nonzero(b);
  const UPoly& outer = ia.size() <= ib.size() ? a : b;
  const UPoly& inner = ia.size() <= ib.size() ? b : a;
  const auto& io = ia.size() <= ib.size() ? ia : ib;
  const auto& ii = ia.size() <= ib.size() ? ib : ia;

  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  mpq_class t;
  for (std::size_t i : io) {
    const mpq_class& x = outer.c_[i].raw();
    for (std::size_t j : ii) {
      mpq_mul(t.get_mpq_t(), x.get_mpq_t(), inner.c_[j].raw().get_mpq_t());
      acc[i + j] += t;
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return UPoly(std::move(out));
}

UPoly UPoly::shifted_up(long k) const {
  if (k < 0) throw DomainError("UPoly::shifted_up with negative shift");
  if (is_zero() || k == 0) return *this;
  UPoly p;
  p.c_.assign(static_cast<std::size_t>(k), Rational());
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

UPoly UPoly::shifted_down(long k) const {
  if (k < 0) throw DomainError("UPoly::shifted_down with negative shift");
  if (is_zero() || k == 0) return *this;
  if (valuation() < k) throw DomainError("UPoly::shifted_down would drop nonzero terms");
  UPoly p;
  p.c_.assign(c_.begin() + k, c_.end());
  return p;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  const long db = b.degree();
  const Rational inv_lead = b.lead().inverse();
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (long k = a.degree(); k >= db; --k) {
    Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Rational f = top * inv_lead;
    for (long j = 0; j <= db; ++j) {
      const Rational& bj = b.c_[static_cast<std::size_t>(j)];
      if (!bj.is_zero()) rem[static_cast<std::size_t>(k - db + j)] -= f * bj;
    }
    quo[static_cast<std::size_t>(k - db)] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

namespace {

using ZPoly = std::vector<mpz_class>;  // low degree first, no trailing zeros

// Integer multiple of p with coprime coefficients.
ZPoly primitive(const UPoly& p) {
  mpz_class den = 1;
  for (long k = 0; k <= p.degree(); ++k) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.coeff(k).denominator().get_mpz_t());
  ZPoly z;
  for (long k = 0; k <= p.degree(); ++k) z.push_back(p.coeff(k).numerator() * (den / p.coeff(k).denominator()));
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

void make_primitive(ZPoly& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
  if (z.empty()) return;
  mpz_class g = 0;
  for (const auto& c : z) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::vector<std::uint64_t> reduce(const ZPoly& z) {
  std::vector<std::uint64_t> out;
  for (const auto& c : z) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), kPrime));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Degree of gcd(a, b) modulo the prime.
long gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), kPrime - 2);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + kPrime - mulmod(f, b[j])) % kPrime;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

// Pseudo-remainder sequence with primitive parts; returns a primitive gcd.
ZPoly gcd_prs(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::size_t db = b.size() - 1;
    const mpz_class lb = b.back();
    while (a.size() >= b.size()) {
      const mpz_class la = a.back();
      const std::size_t shift = a.size() - b.size();
      for (auto& c : a) c *= lb;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
      a.pop_back();
      make_primitive(a);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

UPoly UPoly::gcd(UPoly a, UPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const long v = std::min(a.valuation(), b.valuation());
  a = a.shifted_down(a.valuation());
  b = b.shifted_down(b.valuation());
  UPoly g(Rational(1));
  if (a.degree() > 0 && b.degree() > 0) {
    ZPoly za = primitive(a), zb = primitive(b);
    // When the prime divides neither leading coefficient the modular gcd degree
    // bounds the true one, so degree 0 there proves coprimality.
    const bool lucky = mpz_divisible_ui_p(za.back().get_mpz_t(), kPrime) == 0 &&
                       mpz_divisible_ui_p(zb.back().get_mpz_t(), kPrime) == 0;
    if (!lucky || gcd_degree_mod(reduce(za), reduce(zb)) > 0) {
      ZPoly z = gcd_prs(std::move(za), std::move(zb));
      std::vector<Rational> c;
      for (auto& x : z) c.emplace_back(x, mpz_class(1));
      g = UPoly(std::move(c)).monic();
    }
  }
  return g.shifted_up(v);
}

UPoly UPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * lead().inverse();
}

Rational UPoly::eval(const Rational& x) const {
  mpq_class acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x.raw();
    acc += it->raw();
  }
  return Rational(acc);
}

double UPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (c.sign() < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (k == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << "*";
    os << "u";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace awq
