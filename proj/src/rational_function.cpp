#include "rational_function.hpp"

namespace fibra {

RationalFunction::RationalFunction() : num_(1), den_(Polynomial::constant(1, Rational(1))) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (num.arity() != 1 || den.arity() != 1) throw Error(ErrorCode::ArityMismatch, "rational functions are univariate");
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1, Rational(1));
    return;
  }
  const Polynomial g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  const Rational lc = den_.leading_coefficient();
  num_ *= 1 / lc;
  den_ *= 1 / lc;
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return {Polynomial::constant(1, c), Polynomial::constant(1, Rational(1))};
}

bool RationalFunction::is_constant() const { return num_.degree(0) <= 0 && den_.degree(0) == 0; }

int RationalFunction::degree() const {
  if (is_constant()) return 0;
  return std::max(num_.degree(0), den_.degree(0));
}

std::optional<Rational> RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) return std::nullopt;
  return num_(x) / d;
}

std::optional<Rational> RationalFunction::evaluate_at_infinity() const {
  const int dn = num_.degree(0);
  const int dd = den_.degree(0);
  if (dn > dd) return std::nullopt;
  if (dn < dd) return Rational(0);
  return num_.leading_coefficient() / den_.leading_coefficient();
}

}  // namespace fibra
