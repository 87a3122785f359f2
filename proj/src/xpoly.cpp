#include "awq/xpoly.hpp"

#include "awq/detail/expr_parser.hpp"

namespace awq {

XPoly<Scalar> parse_xpoly(std::string_view text) {
  using P = XPoly<Scalar>;
  struct Hooks {
    static P constant(const Rational& r) { return P(Scalar(r)); }
    static std::optional<P> symbol(std::string_view name) {
      if (name == "x") return P::x();
      if (name == "u") return P(Scalar::u());
      if (name == "q") return P(Scalar::u_pow(4));
      return std::nullopt;
    }
    static P divide(const P& a, const P& b) {
      if (b.degree() > 0) throw ParseError("division by a non-constant polynomial");
      if (b.is_zero()) throw DivisionByZero("division by zero in expression");
      return a * b.lead().inverse();
    }
    static P power(const P& a, long e) {
      if (e < 0) {
        if (a.degree() > 0) throw ParseError("negative power of a non-constant polynomial");
        if (a.is_zero()) throw DivisionByZero("zero raised to a negative power");
        return P(a.lead().pow(e));
      }
      P r(Scalar(1));
      for (long i = 0; i < e; ++i) r = r * a;
      return r;
    }
  };
  return detail::ExprParser<P, Hooks>(text).parse();
}

}  // namespace awq
