#include "awq/scalar.hpp"

#include <ostream>

#include "awq/detail/expr_parser.hpp"

namespace awq {

namespace {

bool is_unit_monomial(const UPoly& p) { return p.is_monomial() && p.lead().is_one(); }

}  // namespace

Scalar::Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("Scalar with zero denominator");
  normalize();
}

Scalar Scalar::u_pow(long k) {
  if (k >= 0) return Scalar(UPoly::monomial(k), UPoly(Rational(1)), Raw{});
  return Scalar(UPoly(Rational(1)), UPoly::monomial(-k), Raw{});
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  if (den_.is_monomial()) {
    long s = std::min(num_.valuation(), den_.degree());
    Rational lead = den_.lead();
    if (s > 0) {
      num_ = num_.shifted_down(s);
      den_ = den_.shifted_down(s);
    }
    if (!lead.is_one()) {
      Rational inv = lead.inverse();
      num_ *= inv;
      den_ *= inv;
    }
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UPoly::divmod(num_, g).first;
    den_ = UPoly::divmod(den_, g).first;
  }
  if (!den_.is_monic()) {
    Rational inv = den_.lead().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational Scalar::as_rational() const {
  if (!is_rational()) throw DomainError("Scalar '" + str() + "' is not a rational constant");
  return num_.coeff(0);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_unit_monomial(den_) && is_unit_monomial(o.den_)) {
    long j = den_.degree(), k = o.den_.degree(), m = std::max(j, k);
    num_ = num_.shifted_up(m - j) + o.num_.shifted_up(m - k);
    den_ = UPoly::monomial(m);
    normalize();
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  UPoly g = UPoly::gcd(den_, o.den_);
  UPoly d1 = UPoly::divmod(den_, g).first;
  UPoly d2 = UPoly::divmod(o.den_, g).first;
  num_ = num_ * d2 + o.num_ * d1;
  den_ = den_ * d2;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (is_unit_monomial(den_) && is_unit_monomial(o.den_)) {
    num_ = num_ * o.num_;
    den_ = UPoly::monomial(den_.degree() + o.den_.degree());
    normalize();
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  UPoly g1 = UPoly::gcd(num_, o.den_);
  UPoly g2 = UPoly::gcd(o.num_, den_);
  UPoly n1 = UPoly::divmod(num_, g1).first, d2 = UPoly::divmod(o.den_, g1).first;
  UPoly n2 = UPoly::divmod(o.num_, g2).first, d1 = UPoly::divmod(den_, g2).first;
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar operator-(const Scalar& a) { return Scalar(-a.num_, a.den_, Scalar::Raw{}); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero Scalar");
  Rational inv = num_.lead().inverse();
  return Scalar(den_ * inv, num_ * inv, Raw{});
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

namespace {

// Integer-coefficient rendering of p scaled by `scale` (result must be integral).
std::string render_integral(const UPoly& p, const mpz_class& scale, const mpz_class& divisor) {
  std::vector<Rational> cs;
  for (const auto& c : p.coeffs()) cs.push_back(c * Rational(scale, divisor));
  return UPoly(std::move(cs)).str();
}

long term_count(const UPoly& p) {
  long n = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) ++n;
  return n;
}

}  // namespace

std::string Scalar::str() const {
  if (den_.degree() == 0) {
    if (num_.degree() <= 0) return num_.coeff(0).str();
  }
  // Clear all rational denominators, then remove the common integer content.
  mpz_class lcm = 1, content = 0;
  for (const UPoly* p : {&num_, &den_})
    for (const auto& c : p->coeffs())
      if (!c.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  for (const UPoly* p : {&num_, &den_})
    for (const auto& c : p->coeffs())
      if (!c.is_zero()) {
        mpz_class v = c.numerator() * (lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      }
  std::string n = render_integral(num_, lcm, content);
  UPoly d_int = den_ * Rational(lcm, content);
  if (d_int.degree() == 0 && d_int.lead().is_one()) return n;
  std::string d = d_int.str();
  bool bare_den = term_count(d_int) == 1 && (d_int.degree() == 0 || d_int.lead().is_one());
  std::string out = term_count(num_) > 1 ? "(" + n + ")" : n;
  out += "/";
  out += bare_den ? d : "(" + d + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar Scalar::parse(std::string_view text) {
  struct Hooks {
    static Scalar constant(const Rational& r) { return Scalar(r); }
    static std::optional<Scalar> symbol(std::string_view name) {
      if (name == "u") return Scalar::u();
      if (name == "q") return Scalar::u_pow(4);
      return std::nullopt;
    }
    static Scalar divide(const Scalar& a, const Scalar& b) {
      if (b.is_zero()) throw DivisionByZero("division by zero in expression");
      return a / b;
    }
    static Scalar power(const Scalar& a, long e) {
      if (e < 0 && a.is_zero()) throw DivisionByZero("zero raised to a negative power");
      return a.pow(e);
    }
  };
  return detail::ExprParser<Scalar, Hooks>(text).parse();
}

std::optional<std::string> regime_warning(const Rational& u0) {
  if (u0.sign() <= 0 || u0 >= Rational(1))
    return "u0 = " + u0.str() +
           " lies outside 0 < u < 1; identities remain formally valid but q = u^4 leaves the regime 0 < q < 1";
  return std::nullopt;
}

Rational scalar_eval(const Scalar& x, const Rational& u0, Diagnostics* diag) {
  if (diag) {
    if (auto w = regime_warning(u0)) diag->warnings.push_back(*w);
  }
  Rational d = x.den().eval(u0);
  if (d.is_zero()) throw PoleError("Scalar '" + x.str() + "' has a pole at u = " + u0.str());
  return x.num().eval(u0) / d;
}

}  // namespace awq
