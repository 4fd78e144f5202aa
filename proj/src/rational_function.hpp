#pragma once

#include <optional>

#include "polynomial.hpp"

namespace fibra {

// Univariate num/den in lowest terms, denominator monic.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction constant(const Rational& c);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_constant() const;
  // Degree as a map P^1 -> P^1; 0 for constants.
  int degree() const;

  // nullopt at a pole. Evaluation at infinity uses the leading terms.
  std::optional<Rational> evaluate(const Rational& x) const;
  std::optional<Rational> evaluate_at_infinity() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace fibra
